package com.example.omni;

import android.database.Cursor;
import android.database.sqlite.SQLiteDatabase;
import java.io.FileInputStream;
import java.io.FileOutputStream;
import java.io.IOException;
import java.util.Date;

public class Storage {
    private final SQLiteDatabase db;

    public Storage(SQLiteDatabase db) {
        this.db = db;
    }

    public int count(String table, String selection) {
        Cursor cursor = db.query(table, null, selection, null, null, null, null);
        int n = cursor.getCount();
        cursor.close();
        return n;
    }

    public void purge() {
        db.execSQL("DELETE FROM notes");
    }

    public byte[] load() throws IOException {
        FileInputStream in = new FileInputStream("notes.db");
        byte[] data = new byte[in.available()];
        in.read(data);
        in.close();
        return data;
    }

    public void save(String path, byte[] data) throws IOException {
        FileOutputStream out = new FileOutputStream(path);
        out.write(data);
        out.close();
    }

    public Date stamp() {
        return new Date();
    }
}
