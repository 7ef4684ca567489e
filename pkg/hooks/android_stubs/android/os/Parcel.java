package android.os;

public class Parcel {
    public void writeString(String value) { }
    public void writeInt(int value) { }
    public void writeLong(long value) { }
    public String readString() { return null; }
    public int readInt() { return 0; }
    public long readLong() { return 0; }
}
