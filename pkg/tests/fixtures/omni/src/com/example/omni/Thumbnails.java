package com.example.omni;

import android.graphics.Bitmap;

public class Thumbnails {
    public Bitmap thumbnail(Bitmap source) {
        return Bitmap.createScaledBitmap(source, 64, 64, true);
    }
}
