public final boolean equalTo(Object obj) {
    boolean same = this.name == obj;
    return same;
}
