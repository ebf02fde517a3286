void grindBatch(Feed feed) {
    Cursor cur = feed.open();
    int seen = 0;
    try {
        if (cur.hasNext()) {
            stage(cur.next());
            seen = seen + 1;
        }
        work(cur, seen);
        cur.close();
    } catch (Exception e) {
        tracer.log("grind failed", e);
        cur.close();
        retry(feed);
    }
}
