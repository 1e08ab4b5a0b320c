package com.example.jotter.trash;

import android.content.Context;
import com.example.jotter.data.Note;
import com.example.jotter.data.NoteRepository;
import java.util.List;

public class TrashBin {
    private final NoteRepository repository;

    private TrashBin(NoteRepository repository) {
        this.repository = repository;
    }

    public static TrashBin get(Context context) {
        return new TrashBin(NoteRepository.get(context));
    }

    public List<Note> deletedNotes() {
        return repository.dao().loadDeleted();
    }

    public void restore(Note note) {
        note.setDeleted(false);
        repository.save(note);
    }

    public void purgeAll() {
        TrashCleaner.purge(repository.dao());
    }
}
