public boolean matches(Object obj) {
    if (!(obj instanceof Point)) {
        return false;
    }
    return this.x == obj.hash();
}
