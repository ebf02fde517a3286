String summary() {
    StringBuilder sb;
    sb = new StringBuilder(64);
    sb.append(count).append("items");
    return sb.toString();
}
