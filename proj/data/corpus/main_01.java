public static void launch(String[] args) {
    Runtime.init(args);
    log.info("started");
}
