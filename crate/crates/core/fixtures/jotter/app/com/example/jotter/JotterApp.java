package com.example.jotter;

import android.app.Application;
import com.example.jotter.data.NoteDatabase;
import com.example.jotter.util.ThemeManager;

public class JotterApp extends Application {
    private NoteDatabase database;

    @Override
    public void onCreate() {
        super.onCreate();
        database = NoteDatabase.open(this);
        ThemeManager.applyStoredTheme(this);
    }

    public NoteDatabase getDatabase() {
        return database;
    }
}
