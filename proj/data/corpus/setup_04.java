public void setUp() throws Exception, TimeoutError {
    pool = new WorkerPool(4);
    pool.warm();
}
