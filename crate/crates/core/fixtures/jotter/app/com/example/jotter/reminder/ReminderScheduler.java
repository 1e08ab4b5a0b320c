package com.example.jotter.reminder;

import android.app.AlarmManager;
import android.app.PendingIntent;
import android.content.Context;
import android.content.Intent;
import java.util.Calendar;

public final class ReminderScheduler {
    private ReminderScheduler() {}

    public static void schedule(Context context, long noteId, int hour, int minute) {
        Calendar when = Calendar.getInstance();
        when.set(Calendar.HOUR_OF_DAY, hour);
        when.set(Calendar.MINUTE, minute);
        when.set(Calendar.SECOND, 0);
        Intent fire = new Intent(context, AlarmReceiver.class).putExtra("note", noteId);
        PendingIntent pending = PendingIntent.getBroadcast(
                context, (int) noteId, fire, PendingIntent.FLAG_IMMUTABLE);
        AlarmManager alarms = (AlarmManager) context.getSystemService(Context.ALARM_SERVICE);
        alarms.setExact(AlarmManager.RTC_WAKEUP, when.getTimeInMillis(), pending);
    }
}
