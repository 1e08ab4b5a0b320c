package com.example.jotter;

import android.os.Bundle;
import android.widget.TextView;
import androidx.appcompat.app.AppCompatActivity;

public class AboutActivity extends AppCompatActivity {
    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_about);
        TextView version = findViewById(R.id.version_label);
        version.setText(getString(R.string.version_format, BuildConfig.VERSION_NAME));
        findViewById(R.id.licenses_link).setOnClickListener(v -> showLicenses());
    }

    private void showLicenses() {
        new LicenseDialog().show(getSupportFragmentManager(), "licenses");
    }
}
