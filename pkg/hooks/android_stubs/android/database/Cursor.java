package android.database;

public interface Cursor {
    int getCount();
    boolean moveToFirst();
    boolean moveToNext();
    int getColumnIndex(String columnName);
    String getString(int columnIndex);
    int getInt(int columnIndex);
    long getLong(int columnIndex);
    void close();
}
