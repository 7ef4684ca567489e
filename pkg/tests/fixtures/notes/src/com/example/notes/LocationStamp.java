package com.example.notes;

import android.location.Location;
import android.location.LocationListener;

/** Remembers where the last note was written. */
public class LocationStamp implements LocationListener {
    private double lat;
    private double lon;

    @Override
    public void onLocationChanged(Location location) {
        if (location != null) {
            lat = location.getLatitude();
            lon = location.getLongitude();
        }
    }

    public String describe() {
        return lat + "," + lon;
    }
}
