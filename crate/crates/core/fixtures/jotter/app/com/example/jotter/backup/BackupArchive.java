package com.example.jotter.backup;

import com.example.jotter.data.Note;
import java.io.ByteArrayOutputStream;
import java.io.IOException;
import java.nio.charset.StandardCharsets;
import java.util.List;
import java.util.zip.ZipEntry;
import java.util.zip.ZipOutputStream;

final class BackupArchive {
    private BackupArchive() {}

    static byte[] pack(List<Note> notes) {
        ByteArrayOutputStream bytes = new ByteArrayOutputStream();
        try (ZipOutputStream zip = new ZipOutputStream(bytes)) {
            for (Note note : notes) {
                zip.putNextEntry(new ZipEntry(note.getId() + ".txt"));
                zip.write((note.getTitle() + "\n\n" + note.getBody()).getBytes(StandardCharsets.UTF_8));
                zip.closeEntry();
            }
        } catch (IOException e) {
            throw new IllegalStateException("archive failed", e);
        }
        return bytes.toByteArray();
    }
}
