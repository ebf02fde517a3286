static void bootstrap(String args) {
    if (args == null) {
        return;
    }
    Server.start(args, 8080);
}
