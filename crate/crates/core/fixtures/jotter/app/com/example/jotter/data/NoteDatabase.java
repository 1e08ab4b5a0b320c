package com.example.jotter.data;

import android.content.Context;
import android.database.sqlite.SQLiteDatabase;
import android.database.sqlite.SQLiteOpenHelper;

public class NoteDatabase extends SQLiteOpenHelper {
    private static final int SCHEMA = 3;

    private NoteDatabase(Context context) {
        super(context, "jotter.db", null, SCHEMA);
    }

    public static NoteDatabase open(Context context) {
        return new NoteDatabase(context.getApplicationContext());
    }

    @Override
    public void onCreate(SQLiteDatabase db) {
        db.execSQL("CREATE TABLE notes (id INTEGER PRIMARY KEY, title TEXT, body TEXT, modified INTEGER, deleted INTEGER)");
        db.execSQL("CREATE TABLE tags (label TEXT PRIMARY KEY)");
        db.execSQL("CREATE TABLE note_tags (note INTEGER, label TEXT)");
    }

    @Override
    public void onUpgrade(SQLiteDatabase db, int from, int to) {
        if (from < 3) {
            db.execSQL("ALTER TABLE notes ADD COLUMN deleted INTEGER DEFAULT 0");
        }
    }

    public NoteDao dao() {
        return new SqliteNoteDao(getWritableDatabase());
    }
}
