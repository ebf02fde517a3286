@Override
public String describe() {
    StringBuilder sb;
    sb = new StringBuilder();
    sb.append(this.name);
    return sb.toString();
}
