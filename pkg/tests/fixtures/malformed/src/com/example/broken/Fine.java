package com.example.broken;

public class Fine {
    java.util.Date now() {
        return new java.util.Date();
    }
}
