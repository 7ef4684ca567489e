package android.widget;

public class ListView extends AdapterView {
    public void setAdapter(Object adapter) { }
}
