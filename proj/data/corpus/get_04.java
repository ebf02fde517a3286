public synchronized T findOne(String key) {
    this.reads = this.reads + 1;
    return this.store.get(key);
}
