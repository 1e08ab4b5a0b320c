package com.example.jotter;

import android.os.Bundle;
import android.widget.EditText;
import androidx.appcompat.app.AppCompatActivity;
import com.example.jotter.data.Tag;
import com.example.jotter.data.NoteRepository;
import com.example.jotter.ui.TagChipView;

public class TagManagerActivity extends AppCompatActivity {
    private NoteRepository repository;
    private TagChipView chips;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_tags);
        repository = NoteRepository.get(this);
        chips = findViewById(R.id.tag_chips);
        chips.setTags(repository.allTags());
        EditText name = findViewById(R.id.tag_name_input);
        findViewById(R.id.add_tag_button).setOnClickListener(v -> {
            Tag tag = new Tag(name.getText().toString().trim());
            repository.saveTag(tag);
            chips.setTags(repository.allTags());
            name.setText("");
        });
    }
}
