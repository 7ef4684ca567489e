package android.content;

public class Context {
    public static final int MODE_PRIVATE = 0;
    public java.io.FileInputStream openFileInput(String name) throws java.io.FileNotFoundException { return null; }
    public java.io.FileOutputStream openFileOutput(String name, int mode) throws java.io.FileNotFoundException { return null; }
    public String getString(int id) { return null; }
    public java.io.File getFilesDir() { return null; }
    public Object getSystemService(String name) { return null; }
    public SharedPreferences getSharedPreferences(String name, int mode) { return null; }
    public void startActivity(Intent intent) { }
    public android.database.sqlite.SQLiteDatabase openOrCreateDatabase(String name, int mode, Object factory) { return null; }
}
