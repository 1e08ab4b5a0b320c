package com.example.jotter.export;

import android.graphics.Paint;

final class PageStyle {
    private PageStyle() {}

    static Paint heading() {
        Paint p = new Paint();
        p.setTextSize(22f);
        p.setFakeBoldText(true);
        return p;
    }

    static Paint body() {
        Paint p = new Paint();
        p.setTextSize(12f);
        return p;
    }
}
