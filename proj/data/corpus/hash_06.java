int h6() { int result; }
