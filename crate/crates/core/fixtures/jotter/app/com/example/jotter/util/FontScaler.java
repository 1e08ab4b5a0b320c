package com.example.jotter.util;

import android.content.Context;
import android.widget.SeekBar;

public final class FontScaler {
    private static final float[] SCALES = {0.85f, 1.0f, 1.15f, 1.3f};
    private static final String PREFS = "appearance";

    private FontScaler() {}

    public static int currentStep(Context context) {
        return context.getSharedPreferences(PREFS, Context.MODE_PRIVATE).getInt("font_step", 1);
    }

    public static float scale(Context context) {
        return SCALES[currentStep(context)];
    }

    public static class Listener implements SeekBar.OnSeekBarChangeListener {
        private final Context context;

        public Listener(Context context) {
            this.context = context;
        }

        @Override
        public void onProgressChanged(SeekBar bar, int step, boolean fromUser) {
            context.getSharedPreferences(PREFS, Context.MODE_PRIVATE).edit().putInt("font_step", step).apply();
        }

        @Override
        public void onStartTrackingTouch(SeekBar bar) {}

        @Override
        public void onStopTrackingTouch(SeekBar bar) {}
    }
}
