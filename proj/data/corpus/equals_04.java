boolean compareRef(Object obj) {
    if (obj == null) {
        return false;
    }
    return Helper.identity(this) == Helper.identity(obj);
}
