package android.database.sqlite;

import android.content.ContentValues;
import android.database.Cursor;

public class SQLiteDatabase {
    public Cursor query(String table, String[] columns, String selection, String[] selectionArgs,
                        String groupBy, String having, String orderBy) { return null; }
    public Cursor rawQuery(String sql, String[] selectionArgs) { return null; }
    public void execSQL(String sql) { }
    public long insert(String table, String nullColumnHack, ContentValues values) { return 0; }
    public int delete(String table, String whereClause, String[] whereArgs) { return 0; }
    public void close() { }
}
