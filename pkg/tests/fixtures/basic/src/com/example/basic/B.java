package com.example.basic;

import android.app.Activity;

// legacy file: CRLF line endings and a Latin-1 byte in a literal
public class B extends Activity {
    static final int LABEL = R.id.label2;
    static final String CAFE = "caf�";

    String describe() {
        return CAFE + " " + new java.util.Date();
    }
}