public T takeValue(String key) {
    T found = this.bag.remove(key);
    return found;
}
