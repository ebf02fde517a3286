int fold() {
    int result;
    result = this.hi - this.lo;
    if (result < 0) {
        result = -result;
    }
    return result;
}
