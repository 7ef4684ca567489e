package com.example.broken;

import android.app.Activity;

public class Main extends Activity {
    void open() {
        startActivity(new Intent(this, Main.class);
    }
