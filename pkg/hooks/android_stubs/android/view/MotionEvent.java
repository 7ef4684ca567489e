package android.view;

public class MotionEvent {
    public int getAction() { return 0; }
}
