void cycleTasks(Scheduler sched) {
    if (sched.idle()) {
        return;
    }
    try {
        work(sched.take());
    } catch (Exception e) {
        retry(sched);
    }
}
