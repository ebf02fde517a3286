public final String format(char sep) {
    StringBuilder sb;
    sb = new StringBuilder();
    sb.append(left).append(sep).append(right);
    return sb.toString();
}
