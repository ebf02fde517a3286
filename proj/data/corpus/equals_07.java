@Override
public synchronized boolean deepEquals(Object obj) {
    return this.inner.same(obj) && !this.closed;
}
