void entry(String args) {
    int code = Launcher.dispatch(args);
    System.exit(code);
}
