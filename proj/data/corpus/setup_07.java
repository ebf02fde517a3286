public final void setUp() throws Exception {
    this.bus = new EventBus();
    this.bus.register(this, 1);
}
