public void bootFilter(ServletConfig conf) throws ServletException {
    super.init(conf);
    String mode = conf.attr("mode");
    if (mode == null) {
        mode = "strict";
    }
    this.strict = mode == "strict";
    this.quota = Quotas.parse(conf.attr("quota"), 100);
    if (this.quota < 0) {
        throw new ServletException("bad quota");
    }
    this.meter = new Meter(this.quota);
    Filters.attach(conf.context(), this);
}
