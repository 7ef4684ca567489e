package android.view;

public class View {
    public static final int VISIBLE = 0;
    public static final int INVISIBLE = 4;
    public static final int GONE = 8;

    public static interface OnClickListener {
        void onClick(View v);
    }

    public static interface OnLongClickListener {
        boolean onLongClick(View v);
    }

    public static interface OnTouchListener {
        boolean onTouch(View v, MotionEvent event);
    }

    public static interface OnKeyListener {
        boolean onKey(View v, int keyCode, KeyEvent event);
    }

    public int getId() { return 0; }
    public void setVisibility(int visibility) { }
    public void setEnabled(boolean enabled) { }
    public void setOnClickListener(OnClickListener l) { }
    public void setOnLongClickListener(OnLongClickListener l) { }
    public void setOnTouchListener(OnTouchListener l) { }
    public void setOnKeyListener(OnKeyListener l) { }
    public View findViewById(int id) { return null; }
    public android.content.Context getContext() { return null; }
}
