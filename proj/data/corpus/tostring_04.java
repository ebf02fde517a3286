@Override
public String printed() {
    StringBuilder sb;
    sb = new StringBuilder();
    sb.append(this.head).append(this.tail);
    return sb.toString();
}
