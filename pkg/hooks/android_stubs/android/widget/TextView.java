package android.widget;

public class TextView extends android.view.View {
    public void setText(CharSequence text) { }
    public void setText(int resId) { }
    public CharSequence getText() { return null; }
}
