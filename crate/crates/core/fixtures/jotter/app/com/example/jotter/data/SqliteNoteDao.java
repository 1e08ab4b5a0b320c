package com.example.jotter.data;

import android.content.ContentValues;
import android.database.Cursor;
import android.database.sqlite.SQLiteDatabase;
import java.util.ArrayList;
import java.util.List;

class SqliteNoteDao implements NoteDao {
    private final SQLiteDatabase db;

    SqliteNoteDao(SQLiteDatabase db) {
        this.db = db;
    }

    private List<Note> query(String where) {
        List<Note> out = new ArrayList<>();
        try (Cursor c = db.query("notes", null, where, null, null, null, "modified DESC")) {
            while (c.moveToNext()) {
                Note n = new Note();
                n.setId(c.getLong(0));
                n.setTitle(c.getString(1));
                n.setBody(c.getString(2));
                n.touch(c.getLong(3));
                n.setDeleted(c.getInt(4) == 1);
                out.add(n);
            }
        }
        return out;
    }

    public List<Note> loadAll() { return query("deleted = 0"); }
    public List<Note> loadDeleted() { return query("deleted = 1"); }

    public Note load(long id) {
        List<Note> found = query("id = " + id);
        return found.isEmpty() ? null : found.get(0);
    }

    private ContentValues values(Note note) {
        ContentValues v = new ContentValues();
        v.put("title", note.getTitle());
        v.put("body", note.getBody());
        v.put("modified", note.getModifiedAt());
        v.put("deleted", note.isDeleted() ? 1 : 0);
        return v;
    }

    public long insert(Note note) { return db.insert("notes", null, values(note)); }
    public void update(Note note) { db.update("notes", values(note), "id = " + note.getId(), null); }
    public void delete(long id) { db.delete("notes", "id = " + id, null); }
    public void deleteAllMarked() { db.delete("notes", "deleted = 1", null); }

    public List<Tag> loadTags() {
        List<Tag> out = new ArrayList<>();
        try (Cursor c = db.query("tags", null, null, null, null, null, "label")) {
            while (c.moveToNext()) {
                out.add(new Tag(c.getString(0)));
            }
        }
        return out;
    }

    public void insertTag(Tag tag) {
        ContentValues v = new ContentValues();
        v.put("label", tag.getLabel());
        db.insert("tags", null, v);
    }
}
