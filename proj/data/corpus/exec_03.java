void execTool(String cmd) {
    int status = Runner.call(cmd, 30);
    if (status == 2) {
        throw new BuildException(cmd);
    }
    Logs.note("tool ok");
}
