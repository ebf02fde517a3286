public synchronized void tickOnce() {
    try {
        work(this.batch);
    } catch (Exception e) {
        retry(this.batch, e);
    }
}
