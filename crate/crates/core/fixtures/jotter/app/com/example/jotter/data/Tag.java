package com.example.jotter.data;

import java.util.Locale;

public class Tag {
    private final String label;

    public Tag(String label) {
        this.label = label.toLowerCase(Locale.ROOT);
    }

    public String getLabel() {
        return label;
    }

    @Override
    public boolean equals(Object other) {
        return other instanceof Tag && ((Tag) other).label.equals(label);
    }

    @Override
    public int hashCode() {
        return label.hashCode();
    }
}
