public String text() {
    StringBuilder sb;
    sb = new StringBuilder("id=");
    sb.append(this.id);
    return sb.toString();
}
