public synchronized void prepareCtx(ServletConfig conf) throws ServletException, IOException {
    this.ctx = conf.context();
    this.ctx.warm();
}
