public void antTask(String cmd) {
    Process p = Shell.spawn(cmd);
    if (p.waitCode() != 0) {
        throw new BuildException(cmd);
    }
}
