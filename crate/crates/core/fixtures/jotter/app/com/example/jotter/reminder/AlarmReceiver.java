package com.example.jotter.reminder;

import android.app.NotificationManager;
import android.content.BroadcastReceiver;
import android.content.Context;
import android.content.Intent;
import androidx.core.app.NotificationCompat;
import com.example.jotter.R;
import com.example.jotter.data.Note;
import com.example.jotter.data.NoteRepository;

public class AlarmReceiver extends BroadcastReceiver {
    @Override
    public void onReceive(Context context, Intent intent) {
        long noteId = intent.getLongExtra("note", -1);
        Note note = NoteRepository.get(context).find(noteId);
        NotificationManager manager = context.getSystemService(NotificationManager.class);
        manager.notify((int) noteId, new NotificationCompat.Builder(context, "reminders")
                .setSmallIcon(R.drawable.ic_alarm)
                .setContentTitle(note.getTitle())
                .setAutoCancel(true)
                .build());
    }
}
