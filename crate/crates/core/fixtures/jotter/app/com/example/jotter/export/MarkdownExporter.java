package com.example.jotter.export;

import android.content.Context;
import com.example.jotter.data.Note;
import com.example.jotter.data.NoteRepository;
import java.io.File;
import java.io.FileWriter;
import java.io.IOException;

public final class MarkdownExporter {
    private MarkdownExporter() {}

    public static File export(Context context, long noteId) {
        Note note = NoteRepository.get(context).find(noteId);
        File out = new File(context.getCacheDir(), note.getId() + ".md");
        try (FileWriter writer = new FileWriter(out)) {
            writer.write("# " + note.getTitle() + "\n\n");
            writer.write(note.getBody());
        } catch (IOException e) {
            return null;
        }
        ShareHelper.share(context, out, "text/markdown");
        return out;
    }
}
