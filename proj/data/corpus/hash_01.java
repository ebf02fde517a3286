public int codeOf() {
    int result;
    result = this.x;
    result = result * 31 + this.y;
    return result;
}
