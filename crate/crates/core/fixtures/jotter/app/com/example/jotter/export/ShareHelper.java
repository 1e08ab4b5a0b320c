package com.example.jotter.export;

import android.content.Context;
import android.content.Intent;
import android.net.Uri;
import androidx.core.content.FileProvider;
import java.io.File;

final class ShareHelper {
    private ShareHelper() {}

    static void share(Context context, File file, String mime) {
        Uri uri = FileProvider.getUriForFile(context, "com.example.jotter.files", file);
        Intent send = new Intent(Intent.ACTION_SEND)
                .setType(mime)
                .putExtra(Intent.EXTRA_STREAM, uri)
                .addFlags(Intent.FLAG_GRANT_READ_URI_PERMISSION);
        context.startActivity(Intent.createChooser(send, null));
    }
}
