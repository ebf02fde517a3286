public int checksum(byte depth) {
    int result;
    result = this.seed;
    int cursor = 0;
    if (depth > 0) {
        cursor = this.table.probe(depth);
        result = result * 131 + cursor;
    }
    if (!this.sealed) {
        result = result + this.salt;
    }
    result = result % 65521;
    return result;
}
