package android.widget;

public class ArrayAdapter {
    public ArrayAdapter(android.content.Context context, int resource, java.util.List objects) { }
    public void notifyDataSetChanged() { }
    public Object getItem(int position) { return null; }
    public int getCount() { return 0; }
}
