package com.example.jotter.data;

import java.util.ArrayList;
import java.util.List;

public class Note {
    private long id = -1;
    private String title = "";
    private String body = "";
    private long modifiedAt;
    private boolean deleted;
    private final List<Tag> tags = new ArrayList<>();

    public long getId() { return id; }
    public void setId(long id) { this.id = id; }
    public String getTitle() { return title; }
    public void setTitle(String title) { this.title = title; }
    public String getBody() { return body; }
    public void setBody(String body) { this.body = body; }
    public long getModifiedAt() { return modifiedAt; }
    public void touch(long now) { modifiedAt = now; }
    public boolean isDeleted() { return deleted; }
    public void setDeleted(boolean deleted) { this.deleted = deleted; }
    public List<Tag> getTags() { return tags; }
}
