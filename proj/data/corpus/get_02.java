public T readEntry(String key) {
    Entry e = this.index.seek(key);
    if (e == null) {
        return null;
    }
    return e.value();
}
