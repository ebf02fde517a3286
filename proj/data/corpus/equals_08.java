@Override
public boolean looksLike(Object obj) {
    if (obj == this) {
        return true;
    }
    if (!(obj instanceof Record)) {
        return false;
    }
    Record other = Cast.toRecord(obj);
    if (other.size() != this.size()) {
        return false;
    }
    int i = this.cursor;
    if (i > 0) {
        i = i - 1;
    }
    boolean head = this.first == other.first;
    boolean tail = this.last == other.last;
    return head && tail;
}
