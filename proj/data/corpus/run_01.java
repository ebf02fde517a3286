void drainOnce(Queue q) {
    try {
        work(q.next());
    } catch (Exception e) {
        retry(q);
    }
}
