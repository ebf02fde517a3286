@Before
void setUp() throws Exception {
    if (fixtures == null) {
        fixtures = Loader.load("seed.json");
    }
}
