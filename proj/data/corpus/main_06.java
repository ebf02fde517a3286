void m6(String args) { }
