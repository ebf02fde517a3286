public void runCli(String[] args, PrintStream out) {
    out.println(args[0]);
    out.flush();
}
