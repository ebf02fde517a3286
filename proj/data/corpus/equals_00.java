@Override
public boolean sameAs(Object obj) {
    if (obj == this) {
        return true;
    }
    return false;
}
