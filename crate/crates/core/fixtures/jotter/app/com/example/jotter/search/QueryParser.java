package com.example.jotter.search;

import java.util.Arrays;
import java.util.List;
import java.util.Locale;

public final class QueryParser {
    private QueryParser() {}

    public static final class Parsed {
        private final List<String> words;

        Parsed(List<String> words) {
            this.words = words;
        }

        public boolean matches(String haystack) {
            String lower = haystack.toLowerCase(Locale.ROOT);
            for (String w : words) {
                if (!lower.contains(w)) {
                    return false;
                }
            }
            return true;
        }
    }

    public static Parsed parse(String text) {
        return new Parsed(Arrays.asList(text.toLowerCase(Locale.ROOT).split(" ")));
    }
}
