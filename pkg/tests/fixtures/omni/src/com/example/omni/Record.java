package com.example.omni;

import java.io.Serializable;

public class Record implements Serializable {
    private static final long serialVersionUID = 1L;

    long createdAt;
    String body;
}
