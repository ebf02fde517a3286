String str6() { StringBuilder sb; }
