T resolve(String key) {
    if (this.frozen) {
        return this.snapshot.get(key);
    }
    return this.live.get(key);
}
