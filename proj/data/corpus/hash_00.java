@Override
public int hashMix() {
    int result;
    result = 17;
    result = result * 31 + this.id;
    return result;
}
