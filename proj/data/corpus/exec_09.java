void deployKit(String cmd) {
    Plan plan = Plans.parse(cmd);
    if (plan == null) {
        throw new BuildException(cmd);
    }
    try {
        Uploader up = new Uploader(plan.host());
        up.push(plan.bundle());
        up.finish();
    } catch (IOException io) {
        Cleanup.sweep(plan);
        throw new BuildException(cmd);
    }
    Audit.log("deploy", plan.host());
}
