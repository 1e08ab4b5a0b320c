package com.example.jotter;

import android.content.Context;
import android.content.Intent;
import android.os.Bundle;
import android.widget.TimePicker;
import androidx.appcompat.app.AppCompatActivity;
import com.example.jotter.reminder.ReminderScheduler;

public class ReminderActivity extends AppCompatActivity {
    private static final String EXTRA_NOTE = "note";

    public static Intent intentFor(Context context, long noteId) {
        return new Intent(context, ReminderActivity.class).putExtra(EXTRA_NOTE, noteId);
    }

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_reminder);
        long noteId = getIntent().getLongExtra(EXTRA_NOTE, -1);
        TimePicker picker = findViewById(R.id.reminder_time_picker);
        findViewById(R.id.set_reminder_button).setOnClickListener(v -> {
            ReminderScheduler.schedule(this, noteId, picker.getHour(), picker.getMinute());
            finish();
        });
    }
}
