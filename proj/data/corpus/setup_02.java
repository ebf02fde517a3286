protected void setUp() throws Exception {
    super.setUp();
    this.client = HttpStub.create();
}
