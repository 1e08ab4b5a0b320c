package com.example.jotter.backup;

import android.app.IntentService;
import android.content.Context;
import android.content.Intent;
import com.example.jotter.data.Note;
import com.example.jotter.data.NoteRepository;
import java.util.List;

public class BackupService extends IntentService {
    public BackupService() {
        super("backup");
    }

    public static void start(Context context) {
        context.startService(new Intent(context, BackupService.class));
    }

    @Override
    protected void onHandleIntent(Intent intent) {
        List<Note> notes = NoteRepository.get(this).allNotes();
        byte[] archive = BackupArchive.pack(notes);
        CloudSync.upload(this, "jotter-backup.zip", archive);
    }
}
