@Before
public void setUp() throws Exception {
    this.repo = new MemoryRepo();
    this.repo.start();
}
