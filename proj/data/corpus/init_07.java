void hookLifecycle(ServletConfig conf) throws ServletException {
    super.init(conf);
    Hooks.register(this, conf.name());
}
