void setUp() throws Exception {
    tmp = Files.createTempDir("fixtures");
    seed(tmp, 42);
}
