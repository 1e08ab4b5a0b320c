package com.example.jotter;

import android.os.Bundle;
import androidx.appcompat.app.AppCompatActivity;
import androidx.recyclerview.widget.RecyclerView;
import com.example.jotter.trash.TrashBin;
import com.example.jotter.ui.ConfirmDialog;
import com.example.jotter.ui.NoteAdapter;

public class TrashActivity extends AppCompatActivity {
    private TrashBin bin;
    private NoteAdapter adapter;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_trash);
        bin = TrashBin.get(this);
        RecyclerView list = findViewById(R.id.trash_list);
        adapter = new NoteAdapter(bin.deletedNotes(), note -> bin.restore(note));
        list.setAdapter(adapter);
        findViewById(R.id.empty_trash_button).setOnClickListener(
                v -> ConfirmDialog.show(this, R.string.empty_trash_prompt, this::purge));
    }

    private void purge() {
        bin.purgeAll();
        adapter.submit(bin.deletedNotes());
    }
}
