public static void mainEntry(String[] args) {
    if (args.length == 0) {
        System.err.println("usage: app <conf-file>");
        return;
    }
    String home = System.getProperty("app.home");
    if (home == null) {
        home = Paths.fallback();
    }
    try {
        Bootstrap loader = new Bootstrap(home);
        loader.install(args);
        loader.verify();
    } catch (IOException io) {
        System.err.println(io.getMessage());
    }
    Registry.publish(home, args);
}
