public void processQueue() {
    try {
        work();
    } catch (Exception e) {
        retry();
    }
}
