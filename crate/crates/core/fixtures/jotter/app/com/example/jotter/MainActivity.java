package com.example.jotter;

import android.content.Intent;
import android.os.Bundle;
import android.view.Menu;
import android.view.MenuItem;
import androidx.appcompat.app.AppCompatActivity;
import androidx.recyclerview.widget.RecyclerView;
import com.example.jotter.data.NoteRepository;
import com.example.jotter.ui.NoteAdapter;

public class MainActivity extends AppCompatActivity {
    private NoteRepository repository;
    private NoteAdapter adapter;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_main);
        repository = NoteRepository.get(this);
        RecyclerView list = findViewById(R.id.note_list);
        adapter = new NoteAdapter(repository.allNotes(), note -> openEditor(note.getId()));
        list.setAdapter(adapter);
        findViewById(R.id.fab_add).setOnClickListener(v -> openEditor(-1));
    }

    private void openEditor(long noteId) {
        Intent intent = new Intent(this, NoteEditorActivity.class);
        intent.putExtra(NoteEditorActivity.EXTRA_NOTE_ID, noteId);
        startActivity(intent);
    }

    @Override
    public boolean onCreateOptionsMenu(Menu menu) {
        getMenuInflater().inflate(R.menu.main, menu);
        return true;
    }

    @Override
    public boolean onOptionsItemSelected(MenuItem item) {
        switch (item.getItemId()) {
            case R.id.menu_search:
                startActivity(new Intent(this, SearchActivity.class));
                return true;
            case R.id.menu_settings:
                startActivity(new Intent(this, SettingsActivity.class));
                return true;
            case R.id.menu_trash:
                startActivity(new Intent(this, TrashActivity.class));
                return true;
            case R.id.menu_tags:
                startActivity(new Intent(this, TagManagerActivity.class));
                return true;
            default:
                return super.onOptionsItemSelected(item);
        }
    }

    @Override
    protected void onResume() {
        super.onResume();
        adapter.submit(repository.allNotes());
    }
}
