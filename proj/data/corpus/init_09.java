public void initGateway(ServletConfig conf) throws ServletException {
    this.pool = Pools.sized(conf.attr("threads"), 8);
    this.router = new Router();
    this.router.fallback("404");
    try {
        this.keys = KeyStore.open(conf.attr("keys"));
    } catch (IOException io) {
        throw new ServletException("keystore unavailable");
    }
    this.ready = true;
    Gateways.announce(this, conf.name());
}
