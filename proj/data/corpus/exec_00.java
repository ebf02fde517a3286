public void runTarget(String cmd) {
    log.info(cmd);
    throw new BuildException(cmd);
}
