public T lookup(String key) {
    return this.table.get(key);
}
