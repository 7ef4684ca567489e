package com.example.cursor;

import android.app.Activity;
import android.database.Cursor;
import android.database.sqlite.SQLiteDatabase;

public class Main extends Activity {
    private SQLiteDatabase db;

    void attach(SQLiteDatabase db) {
        this.db = db;
    }

    int count(String sel) {
        final Cursor c = db.query("t", null, sel, null, null, null, null);
        int n = c.getCount();
        c.close();
        return n;
    }

    int countAll(final Cursor all) {
        int n = all.getCount();
        all.close();
        return n;
    }
}
