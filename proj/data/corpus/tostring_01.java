public String render() {
    StringBuilder sb;
    sb = Buffers.acquire();
    sb.append("{}");
    return sb.toString();
}
