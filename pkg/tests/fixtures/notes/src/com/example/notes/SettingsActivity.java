package com.example.notes;

import android.app.Activity;
import android.bluetooth.BluetoothAdapter;
import android.content.SharedPreferences;
import android.graphics.Bitmap;
import android.net.Uri;
import android.os.Bundle;
import android.view.View;
import android.widget.Button;
import android.widget.EditText;
import android.widget.Toast;

public class SettingsActivity extends Activity {
    private EditText server;
    private BluetoothAdapter bluetooth;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.settings);
        server = (EditText) findViewById(R.id.server);
        final Button pair = (Button) findViewById(R.id.bluetooth);
        bluetooth = BluetoothAdapter.getDefaultAdapter();
        SharedPreferences prefs = getSharedPreferences("notes_prefs", MODE_PRIVATE);
        server.setText(prefs.getString("server", "https://notes.example.com"));

        pair.setOnClickListener(new View.OnClickListener() {
            public void onClick(View v) {
                if (bluetooth == null) {
                    Toast.makeText(SettingsActivity.this, "No Bluetooth", Toast.LENGTH_SHORT).show();
                } else if (!bluetooth.isEnabled()) {
                    bluetooth.enable();
                }
            }
        });
    }

    @Override
    protected void onPause() {
        super.onPause();
        Uri uri = Uri.parse(server.getText().toString());
        Uri help = Uri.parse("https://notes.example.com/help");
        SharedPreferences.Editor editor = getSharedPreferences("notes_prefs", MODE_PRIVATE).edit();
        editor.putString("server", uri.getPath() == null ? "" : server.getText().toString());
        editor.putString("help", help.getPath());
        editor.apply();
    }

    static Bitmap avatar(Bitmap photo) {
        return Bitmap.createBitmap(photo, 0, 0, 96, 96);
    }
}
