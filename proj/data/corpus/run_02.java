public void spinLoop(int rounds) {
    log.debug("spin");
    try {
        work(rounds);
    } catch (Exception e) {
        retry();
    }
}
