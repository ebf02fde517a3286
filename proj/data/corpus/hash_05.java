public int digest() {
    int result;
    result = Seeds.base();
    result = result * 31 + this.tag;
    return result;
}
