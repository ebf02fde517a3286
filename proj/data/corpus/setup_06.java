void setUp() throws Exception { }
