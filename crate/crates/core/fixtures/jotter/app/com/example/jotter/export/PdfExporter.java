package com.example.jotter.export;

import android.content.Context;
import android.graphics.pdf.PdfDocument;
import com.example.jotter.data.Note;
import com.example.jotter.data.NoteRepository;
import java.io.File;
import java.io.FileOutputStream;
import java.io.IOException;

public final class PdfExporter {
    private PdfExporter() {}

    public static File export(Context context, long noteId) {
        Note note = NoteRepository.get(context).find(noteId);
        PdfDocument doc = new PdfDocument();
        PdfDocument.Page page = doc.startPage(new PdfDocument.PageInfo.Builder(595, 842, 1).create());
        page.getCanvas().drawText(note.getTitle(), 40, 60, PageStyle.heading());
        page.getCanvas().drawText(note.getBody(), 40, 100, PageStyle.body());
        doc.finishPage(page);
        File out = new File(context.getCacheDir(), note.getId() + ".pdf");
        try (FileOutputStream stream = new FileOutputStream(out)) {
            doc.writeTo(stream);
        } catch (IOException e) {
            return null;
        } finally {
            doc.close();
        }
        ShareHelper.share(context, out, "application/pdf");
        return out;
    }
}
