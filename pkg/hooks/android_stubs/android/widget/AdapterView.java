package android.widget;

import android.view.View;

public class AdapterView extends View {
    public static interface OnItemClickListener {
        void onItemClick(AdapterView parent, View view, int position, long id);
    }

    public void setOnItemClickListener(OnItemClickListener listener) { }
    public Object getItemAtPosition(int position) { return null; }
}
