package com.example.jotter.ui;

import android.app.AlertDialog;
import android.content.Context;

public final class ConfirmDialog {
    private ConfirmDialog() {}

    public static void show(Context context, int message, Runnable onConfirm) {
        new AlertDialog.Builder(context)
                .setMessage(message)
                .setPositiveButton(android.R.string.ok, (d, w) -> onConfirm.run())
                .setNegativeButton(android.R.string.cancel, null)
                .show();
    }
}
