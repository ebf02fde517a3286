T g6(String key) { }
