boolean eq6(Object obj) { }
