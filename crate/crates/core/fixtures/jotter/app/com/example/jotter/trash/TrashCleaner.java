package com.example.jotter.trash;

import com.example.jotter.data.Note;
import com.example.jotter.data.NoteDao;

final class TrashCleaner {
    private TrashCleaner() {}

    static void purge(NoteDao dao) {
        for (Note note : dao.loadDeleted()) {
            dao.delete(note.getId());
        }
        dao.deleteAllMarked();
    }
}
