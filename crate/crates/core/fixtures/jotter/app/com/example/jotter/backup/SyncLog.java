package com.example.jotter.backup;

import android.content.Context;
import android.util.Log;

final class SyncLog {
    private SyncLog() {}

    static void failure(Context context, String name, Exception e) {
        Log.w("CloudSync", "upload of " + name + " failed", e);
        context.getSharedPreferences("sync", Context.MODE_PRIVATE)
                .edit()
                .putLong("last_failure", System.currentTimeMillis())
                .apply();
    }
}
