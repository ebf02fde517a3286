public static synchronized void boot(String[] args) {
    Config cfg = Config.parse(args);
    App.run(cfg);
}
