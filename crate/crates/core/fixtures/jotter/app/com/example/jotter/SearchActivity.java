package com.example.jotter;

import android.os.Bundle;
import android.widget.SearchView;
import androidx.appcompat.app.AppCompatActivity;
import androidx.recyclerview.widget.RecyclerView;
import com.example.jotter.search.SearchIndex;
import com.example.jotter.ui.NoteAdapter;

public class SearchActivity extends AppCompatActivity {
    private SearchIndex index;
    private NoteAdapter adapter;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_search);
        index = SearchIndex.get(this);
        RecyclerView results = findViewById(R.id.search_results);
        adapter = new NoteAdapter(java.util.Collections.emptyList(), null);
        results.setAdapter(adapter);
        SearchView query = findViewById(R.id.search_query);
        query.setOnQueryTextListener(new SearchView.OnQueryTextListener() {
            @Override
            public boolean onQueryTextSubmit(String text) {
                adapter.submit(index.lookup(text));
                return true;
            }

            @Override
            public boolean onQueryTextChange(String text) {
                return false;
            }
        });
    }
}
