package android.os;

public interface Parcelable {
    int describeContents();
    void writeToParcel(Parcel dest, int flags);

    public static interface Creator {
        Object createFromParcel(Parcel source);
        Object[] newArray(int size);
    }
}
