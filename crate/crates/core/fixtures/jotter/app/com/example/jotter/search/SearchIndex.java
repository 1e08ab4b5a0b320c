package com.example.jotter.search;

import android.content.Context;
import com.example.jotter.data.Note;
import com.example.jotter.data.NoteRepository;
import java.util.ArrayList;
import java.util.List;

public class SearchIndex {
    private final NoteRepository repository;

    private SearchIndex(NoteRepository repository) {
        this.repository = repository;
    }

    public static SearchIndex get(Context context) {
        return new SearchIndex(NoteRepository.get(context));
    }

    public List<Note> lookup(String text) {
        QueryParser.Parsed parsed = QueryParser.parse(text);
        List<Note> hits = new ArrayList<>();
        for (Note note : repository.allNotes()) {
            if (parsed.matches(note.getTitle() + " " + note.getBody())) {
                hits.add(note);
            }
        }
        return hits;
    }
}
