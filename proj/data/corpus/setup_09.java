protected void setUp() throws Exception {
    super.setUp();
    this.server = ServerStub.bind(0);
    int port = this.server.port();
    this.url = Urls.local(port);
    this.mailbox = new Mailbox(16);
    try {
        this.server.start();
    } catch (BindError be) {
        this.server = ServerStub.bind(port + 1);
        this.server.start();
    }
    Health.await(this.url, 500);
}
