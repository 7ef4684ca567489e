package com.example.basic;

import android.app.Activity;
import android.content.Intent;
import android.os.Bundle;
import android.view.View;

public class A extends Activity {
    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        View button = findViewById(R.id.button1);
        /* a comment mentioning new Intent(this, B.class) must be ignored */
        String s = "findViewById(R.id.fake) inside a string";
        Intent next = new Intent(this, B.class);
        next.putExtra("origin", s);
        startActivity(next);
    }
}
