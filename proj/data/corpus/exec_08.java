public void packageJar(String cmd, Manifest mf) {
    Archive arc = new Archive("out.jar");
    arc.stamp(mf.version());
    int added = arc.addTree("classes");
    if (added == 0) {
        arc.abort();
        throw new BuildException(cmd);
    }
    arc.seal(mf);
    Artifacts.record(arc.digest(), added);
}
