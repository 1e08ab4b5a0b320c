package com.example.jotter.ui;

import android.view.LayoutInflater;
import android.view.View;
import android.view.ViewGroup;
import android.widget.TextView;
import androidx.recyclerview.widget.RecyclerView;
import com.example.jotter.R;
import com.example.jotter.data.Note;
import com.example.jotter.util.DateFormatter;
import java.util.ArrayList;
import java.util.List;

public class NoteAdapter extends RecyclerView.Adapter<NoteAdapter.Holder> {
    public interface OnNoteClick {
        void onClick(Note note);
    }

    private final List<Note> notes = new ArrayList<>();
    private final OnNoteClick listener;

    public NoteAdapter(List<Note> initial, OnNoteClick listener) {
        this.notes.addAll(initial);
        this.listener = listener;
    }

    public void submit(List<Note> fresh) {
        notes.clear();
        notes.addAll(fresh);
        notifyDataSetChanged();
    }

    @Override
    public Holder onCreateViewHolder(ViewGroup parent, int type) {
        View row = LayoutInflater.from(parent.getContext()).inflate(R.layout.item_note, parent, false);
        return new Holder(row);
    }

    @Override
    public void onBindViewHolder(Holder holder, int position) {
        Note note = notes.get(position);
        holder.title.setText(note.getTitle());
        holder.date.setText(DateFormatter.relative(note.getModifiedAt()));
        if (listener != null) {
            holder.itemView.setOnClickListener(v -> listener.onClick(note));
        }
    }

    @Override
    public int getItemCount() {
        return notes.size();
    }

    static class Holder extends RecyclerView.ViewHolder {
        final TextView title;
        final TextView date;

        Holder(View row) {
            super(row);
            title = row.findViewById(R.id.note_item_title);
            date = row.findViewById(R.id.note_item_date);
        }
    }
}
