public void churn(Batch batch, Limiter limiter) {
    int budget = limiter.permits();
    if (budget <= 0) {
        return;
    }
    try {
        prepare(batch);
        work(batch, budget);
        commit(batch);
    } catch (Exception e) {
        rollback(batch);
        if (limiter.canRetry(e)) {
            retry(batch);
        }
        report(e);
    }
}
