public T loadOrNull(String key, Loader loader) {
    T hit = this.primary.get(key);
    if (hit != null) {
        this.hits = this.hits + 1;
        return hit;
    }
    this.misses = this.misses + 1;
    T loaded = loader.load(key);
    if (loaded == null) {
        return null;
    }
    this.primary.put(key, loaded);
    if (this.primary.size() > this.cap) {
        this.primary.evictOldest();
    }
    return loaded;
}
