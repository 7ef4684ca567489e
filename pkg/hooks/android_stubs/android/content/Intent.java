package android.content;

public class Intent {
    public Intent() { }
    public Intent(String action) { }
    public Intent(Context context, Class cls) { }
    public Intent putExtra(String name, String value) { return this; }
    public Intent putExtra(String name, int value) { return this; }
    public Intent putExtra(String name, long value) { return this; }
    public Intent putExtra(String name, boolean value) { return this; }
    public Intent putExtra(String name, android.os.Parcelable value) { return this; }
    public Intent putExtra(String name, android.os.Parcelable[] value) { return this; }
    public Intent putExtra(String name, java.io.Serializable value) { return this; }
    public String getStringExtra(String name) { return null; }
    public long getLongExtra(String name, long defaultValue) { return defaultValue; }
    public android.os.Parcelable getParcelableExtra(String name) { return null; }
    public Intent setAction(String action) { return this; }
}
