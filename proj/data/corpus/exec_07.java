public void compileStep(String cmd) {
    Sources src = Sources.scan("src");
    this.compiler.run(src);
    throw new BuildException(cmd);
}
