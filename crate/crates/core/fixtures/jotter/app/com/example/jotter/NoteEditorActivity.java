package com.example.jotter;

import android.os.Bundle;
import android.widget.EditText;
import androidx.appcompat.app.AppCompatActivity;
import com.example.jotter.data.Note;
import com.example.jotter.data.NoteRepository;
import com.example.jotter.ui.ConfirmDialog;

public class NoteEditorActivity extends AppCompatActivity {
    public static final String EXTRA_NOTE_ID = "note_id";

    private EditText titleField;
    private EditText bodyField;
    private Note note;
    private NoteRepository repository;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_editor);
        repository = NoteRepository.get(this);
        titleField = findViewById(R.id.note_title);
        bodyField = findViewById(R.id.note_body);
        long id = getIntent().getLongExtra(EXTRA_NOTE_ID, -1);
        note = id < 0 ? new Note() : repository.find(id);
        titleField.setText(note.getTitle());
        bodyField.setText(note.getBody());
        findViewById(R.id.save_button).setOnClickListener(v -> persist());
        findViewById(R.id.discard_button).setOnClickListener(v -> confirmDiscard());
        findViewById(R.id.remind_button).setOnClickListener(v -> openReminder());
        findViewById(R.id.export_button).setOnClickListener(v -> openExport());
    }

    private void persist() {
        note.setTitle(titleField.getText().toString());
        note.setBody(bodyField.getText().toString());
        repository.save(note);
        finish();
    }

    private void confirmDiscard() {
        ConfirmDialog.show(this, R.string.discard_changes, this::finish);
    }

    private void openReminder() {
        startActivity(ReminderActivity.intentFor(this, note.getId()));
    }

    private void openExport() {
        startActivity(ExportActivity.intentFor(this, note.getId()));
    }
}
