package android.app;

import android.content.Context;
import android.content.Intent;
import android.os.Bundle;
import android.view.View;

public class Activity extends Context {
    protected void onCreate(Bundle savedInstanceState) { }
    protected void onResume() { }
    protected void onPause() { }
    protected void onDestroy() { }
    public void setContentView(int layoutResId) { }
    public View findViewById(int id) { return null; }
    public Intent getIntent() { return null; }
    public void setTitle(CharSequence title) { }
    public void finish() { }
    public void setResult(int resultCode) { }
    public static final int RESULT_OK = -1;
    public static final int RESULT_CANCELED = 0;
    protected void onActivityResult(int requestCode, int resultCode, Intent data) { }
    public void startActivityForResult(Intent intent, int requestCode) { }
}
