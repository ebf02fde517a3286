public void launchChain(String cmd) {
    this.attempts = this.attempts + 1;
    throw new BuildException(cmd);
}
