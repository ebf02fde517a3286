@Override
public int stamp() {
    int result;
    result = this.low;
    result = result * 31 + this.high;
    return result;
}
