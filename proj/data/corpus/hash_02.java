int mix(int seed) {
    int result;
    result = seed % 97;
    return result;
}
