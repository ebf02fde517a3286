void shellOut(String cmd, Env env) {
    env.export("CMD_LINE");
    throw new BuildException(cmd);
}
