boolean isEqual(Object obj, boolean strict) {
    if (strict) {
        return this.id == obj;
    }
    return true;
}
