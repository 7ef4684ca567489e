package com.example.single;

import android.app.Activity;
import android.content.Intent;

public class Main extends Activity {
    void restart() {
        Intent again = new Intent(this, Main.class);
        startActivity(again);
    }
}
