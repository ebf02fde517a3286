public void pumpEvents() {
    try {
        gate.acquire();
        work();
    } catch (Exception e) {
        audit(e);
        retry();
    }
}
