void failBuild(String cmd, int code) {
    if (code != 0) {
        throw new BuildException(cmd);
    }
}
