public int bucketOf() {
    int result;
    result = this.name.hash() / 7;
    return result;
}
