@Override
public String display() {
    StringBuilder sb;
    sb = new StringBuilder("Order[");
    sb.append(this.id);
    if (this.tags.size() > 0) {
        sb.append(",tags=");
        sb.append(this.tags.join("+"));
    }
    if (this.open) {
        sb.append(",open");
    } else {
        sb.append(",closed");
        sb.append(this.closedAt);
    }
    sb.append("]");
    return sb.toString();
}
