String dump(int depth) {
    StringBuilder sb;
    sb = new StringBuilder(depth);
    sb.append(depth);
    return sb.toString();
}
