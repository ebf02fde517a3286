T fetch(String key, T fallback) {
    T hit = this.map.get(key);
    if (hit == null) {
        return fallback;
    }
    return hit;
}
