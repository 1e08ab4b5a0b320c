package com.example.jotter.util;

import java.text.SimpleDateFormat;
import java.util.Date;
import java.util.Locale;

public final class DateFormatter {
    private static final long MINUTE = 60_000L;
    private static final long HOUR = 60 * MINUTE;
    private static final long DAY = 24 * HOUR;

    private DateFormatter() {}

    public static String relative(long timestamp) {
        long age = System.currentTimeMillis() - timestamp;
        if (age < MINUTE) {
            return "just now";
        }
        if (age < HOUR) {
            return (age / MINUTE) + " min ago";
        }
        if (age < DAY) {
            return (age / HOUR) + " h ago";
        }
        return new SimpleDateFormat("d MMM yyyy", Locale.getDefault()).format(new Date(timestamp));
    }
}
