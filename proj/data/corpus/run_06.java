void run6() { work; retry; }
