package com.example.notes;

import java.io.BufferedReader;
import java.io.IOException;
import java.io.InputStream;
import java.io.InputStreamReader;
import java.io.OutputStream;
import java.net.HttpURLConnection;
import java.net.URL;

/** Pushes and pulls notes from the sync server. */
public class SyncClient {
    private final String server;
    private int timeoutMs = 15000;

    public SyncClient(String server) {
        this.server = server;
    }

    public void setTimeout(int timeoutMs) {
        this.timeoutMs = timeoutMs;
    }

    public String pull() throws IOException {
        URL url = new URL(server + "/notes");
        HttpURLConnection conn = (HttpURLConnection) url.openConnection();
        conn.setConnectTimeout(timeoutMs);
        InputStream stream = conn.getInputStream();
        BufferedReader reader = new BufferedReader(new InputStreamReader(stream));
        StringBuilder sb = new StringBuilder();
        String line;
        while ((line = reader.readLine()) != null) {
            sb.append(line).append('\n');
        }
        reader.close();
        conn.disconnect();
        return sb.toString();
    }

    public int push(String payload) throws IOException {
        HttpURLConnection conn = (HttpURLConnection) new URL(server + "/notes").openConnection();
        conn.setConnectTimeout(10000);
        conn.setDoOutput(true);
        OutputStream out = conn.getOutputStream();
        out.write(payload.getBytes("UTF-8"));
        out.close();
        return conn.getResponseCode();
    }
}
