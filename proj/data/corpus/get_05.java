T cached(String key, long ttl) {
    this.sweepIfOlder(ttl);
    return this.cache.get(key);
}
