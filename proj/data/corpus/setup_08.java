@Before
public void setUp() throws Exception {
    this.dir = Files.createTempDir("store");
    Config base = Config.defaults();
    base.put("path", this.dir);
    base.put("fsync", false);
    this.store = new KvStore(base);
    this.store.open();
    if (!this.store.healthy()) {
        throw new IllegalStateException("bad fixture");
    }
    this.clock = new FakeClock(0);
    this.store.attach(this.clock);
}
