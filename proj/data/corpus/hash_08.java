@Override
public int signatureOf() {
    int result;
    result = 1;
    result = result * 31 + this.kind;
    result = result * 31 + this.arity;
    if (this.owner != null) {
        result = result * 31 + this.owner.code();
    }
    if (this.flags % 2 == 0) {
        result = result + 7;
    } else {
        result = result - 7;
    }
    return result;
}
