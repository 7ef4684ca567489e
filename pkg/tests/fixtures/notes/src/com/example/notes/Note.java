package com.example.notes;

import android.os.Parcel;
import android.os.Parcelable;
import java.io.Serializable;
import java.util.Date;

/** A single note. Parcelable so it can travel inside an Intent. */
public class Note implements Parcelable, Comparable {
    public long id;
    public String title;
    public String body;
    public long modified;

    public Note(long id, String title, String body, long modified) {
        this.id = id;
        this.title = title;
        this.body = body;
        this.modified = modified;
    }

    public Date modifiedDate() {
        return new Date(modified);
    }

    public boolean matches(String query) {
        if (query == null || query.length() == 0) {
            return true;
        }
        String q = query.toLowerCase();
        return title.toLowerCase().indexOf(q) >= 0 || body.toLowerCase().indexOf(q) >= 0;
    }

    public int compareTo(Object other) {
        Note o = (Note) other;
        if (modified == o.modified) {
            return 0;
        }
        return modified > o.modified ? -1 : 1;
    }

    @Override
    public int describeContents() {
        return 0;
    }

    @Override
    public void writeToParcel(Parcel dest, int flags) {
        dest.writeLong(id);
        dest.writeString(title);
        dest.writeString(body);
        dest.writeLong(modified);
    }

    public static final Parcelable.Creator CREATOR = new Parcelable.Creator() {
        public Object createFromParcel(Parcel in) {
            return new Note(in.readLong(), in.readString(), in.readString(), in.readLong());
        }

        public Object[] newArray(int size) {
            return new Note[size];
        }
    };

    /** Snapshot written to the export file. */
    public static class Snapshot implements Serializable {
        private static final long serialVersionUID = 2L;

        public final String title;
        public final String body;

        public Snapshot(Note note) {
            this.title = note.title;
            this.body = note.body;
        }
    }
}
