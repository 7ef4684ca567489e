package android.view;

public class KeyEvent {
    public static final int KEYCODE_ENTER = 66;
    public int getAction() { return 0; }
}
