package com.example.jotter.data;

import android.content.Context;
import com.example.jotter.JotterApp;
import java.util.List;

public class NoteRepository {
    private static NoteRepository instance;
    private final NoteDao dao;

    private NoteRepository(NoteDao dao) {
        this.dao = dao;
    }

    public static synchronized NoteRepository get(Context context) {
        if (instance == null) {
            JotterApp app = (JotterApp) context.getApplicationContext();
            instance = new NoteRepository(app.getDatabase().dao());
        }
        return instance;
    }

    public List<Note> allNotes() { return dao.loadAll(); }
    public Note find(long id) { return dao.load(id); }

    public void save(Note note) {
        note.touch(System.currentTimeMillis());
        if (note.getId() < 0) {
            note.setId(dao.insert(note));
        } else {
            dao.update(note);
        }
    }

    public void moveToTrash(Note note) {
        note.setDeleted(true);
        dao.update(note);
    }

    public List<Tag> allTags() { return dao.loadTags(); }
    public void saveTag(Tag tag) { dao.insertTag(tag); }
    public NoteDao dao() { return dao; }
}
