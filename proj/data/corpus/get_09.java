T peekAt(String key) {
    Shard shard = this.shards[this.spread(key)];
    if (shard == null) {
        return null;
    }
    Slot slot = shard.probe(key);
    if (slot == null || slot.expired(this.now())) {
        this.stale = this.stale + 1;
        return null;
    }
    return slot.read();
}
