package com.example.jotter;

import android.content.Context;
import android.content.Intent;
import android.os.Bundle;
import android.widget.Spinner;
import androidx.appcompat.app.AppCompatActivity;
import com.example.jotter.export.MarkdownExporter;
import com.example.jotter.export.PdfExporter;

public class ExportActivity extends AppCompatActivity {
    private static final String EXTRA_NOTE = "note";

    public static Intent intentFor(Context context, long noteId) {
        return new Intent(context, ExportActivity.class).putExtra(EXTRA_NOTE, noteId);
    }

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_export);
        long noteId = getIntent().getLongExtra(EXTRA_NOTE, -1);
        Spinner format = findViewById(R.id.export_format_spinner);
        findViewById(R.id.share_file_button).setOnClickListener(v -> {
            if (format.getSelectedItemPosition() == 0) {
                PdfExporter.export(this, noteId);
            } else {
                MarkdownExporter.export(this, noteId);
            }
        });
    }
}
