package com.example.notes;

import android.content.Context;
import java.io.File;
import java.io.FileInputStream;
import java.io.FileOutputStream;
import java.io.IOException;
import java.io.ObjectOutputStream;
import java.util.List;

/** Writes notes to local files. */
public class Exporter {
    private final Context context;

    public Exporter(Context context) {
        this.context = context;
    }

    public File exportAll(List notes) throws IOException {
        File target = new File(context.getFilesDir(), "export.bin");
        FileOutputStream fos = new FileOutputStream(target);
        ObjectOutputStream oos = new ObjectOutputStream(fos);
        for (int i = 0; i < notes.size(); i++) {
            oos.writeObject(new Note.Snapshot((Note) notes.get(i)));
        }
        oos.close();
        return target;
    }

    public void writeDraft(String text) throws IOException {
        FileOutputStream out = context.openFileOutput("draft.txt", Context.MODE_PRIVATE);
        out.write(text.getBytes("UTF-8"));
        out.close();
    }

    public String readDraft() throws IOException {
        FileInputStream in = context.openFileInput("draft.txt");
        byte[] buffer = new byte[4096];
        int n = in.read(buffer);
        in.close();
        return n <= 0 ? "" : new String(buffer, 0, n, "UTF-8");
    }
}
