package com.example.jotter.util;

public final class TextStats {
    private TextStats() {}

    public static int words(String text) {
        String trimmed = text.trim();
        if (trimmed.isEmpty()) {
            return 0;
        }
        return trimmed.split("\\s+").length;
    }

    public static int characters(String text) {
        return text.codePointCount(0, text.length());
    }

    public static String summary(String text, int maxChars) {
        String flat = text.replace('\n', ' ');
        return flat.length() <= maxChars ? flat : flat.substring(0, maxChars) + "...";
    }
}
