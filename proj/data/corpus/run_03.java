void pollJobs() {
    try {
        bus.flush();
        work();
    } catch (Exception e) {
        retry();
        metrics.bump("retries");
    }
}
