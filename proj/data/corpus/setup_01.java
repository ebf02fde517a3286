public void setUp() throws Exception {
    db = Database.open("test.db");
    db.migrate(3);
}
