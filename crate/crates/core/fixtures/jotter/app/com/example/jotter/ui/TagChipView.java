package com.example.jotter.ui;

import android.content.Context;
import android.util.AttributeSet;
import android.widget.LinearLayout;
import android.widget.TextView;
import com.example.jotter.data.Tag;
import java.util.List;

public class TagChipView extends LinearLayout {
    public TagChipView(Context context, AttributeSet attrs) {
        super(context, attrs);
        setOrientation(HORIZONTAL);
    }

    public void setTags(List<Tag> tags) {
        removeAllViews();
        for (Tag tag : tags) {
            TextView chip = new TextView(getContext());
            chip.setText("#" + tag.getLabel());
            chip.setPadding(12, 4, 12, 4);
            addView(chip);
        }
    }
}
