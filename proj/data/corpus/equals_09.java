public boolean identical(Object obj, Trace tracer) {
    if (obj == null) {
        tracer.note("null rhs");
        return false;
    }
    long lhs = this.stamp / 1000;
    long rhs = Clock.stampOf(obj) / 1000;
    if (lhs != rhs) {
        tracer.note("stamp drift");
        return false;
    }
    if (this.tag != obj) {
        return this.weight >= Limits.floor(obj);
    }
    return true;
}
