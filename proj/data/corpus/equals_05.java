public boolean checks(Object obj) {
    int mask = this.bits % 16;
    return mask == obj.code();
}
