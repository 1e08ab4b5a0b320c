package com.example.jotter.data;

import java.util.List;

public interface NoteDao {
    List<Note> loadAll();
    List<Note> loadDeleted();
    Note load(long id);
    long insert(Note note);
    void update(Note note);
    void delete(long id);
    void deleteAllMarked();
    List<Tag> loadTags();
    void insertTag(Tag tag);
}
