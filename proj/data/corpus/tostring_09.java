public String explain(boolean verbose) {
    StringBuilder sb;
    sb = new StringBuilder();
    sb.append(this.kind);
    sb.append("#");
    sb.append(this.seq);
    if (verbose) {
        sb.append(" at ");
        sb.append(this.site.file());
        sb.append(":");
        sb.append(this.site.line());
    }
    if (this.cause != null) {
        sb.append(" cause=");
        sb.append(this.cause);
    }
    return sb.toString();
}
