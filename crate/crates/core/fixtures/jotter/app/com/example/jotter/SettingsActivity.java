package com.example.jotter;

import android.os.Bundle;
import android.widget.SeekBar;
import android.widget.Switch;
import androidx.appcompat.app.AppCompatActivity;
import com.example.jotter.backup.BackupService;
import com.example.jotter.util.FontScaler;
import com.example.jotter.util.ThemeManager;

public class SettingsActivity extends AppCompatActivity {
    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_settings);

        Switch darkMode = findViewById(R.id.dark_mode_switch);
        darkMode.setChecked(ThemeManager.isDark(this));
        darkMode.setOnCheckedChangeListener((view, checked) -> ThemeManager.setDark(this, checked));

        SeekBar fontSize = findViewById(R.id.font_size_seek);
        findViewById(R.id.settings_scroll).setVerticalScrollBarEnabled(true);
        fontSize.setProgress(FontScaler.currentStep(this));
        fontSize.setOnSeekBarChangeListener(new FontScaler.Listener(this));

        findViewById(R.id.backup_now).setOnClickListener(v -> BackupService.start(this));
        findViewById(R.id.about_row).setOnClickListener(
                v -> startActivity(new android.content.Intent(this, AboutActivity.class)));
    }
}
