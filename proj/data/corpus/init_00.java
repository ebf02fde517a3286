public void bindConfig(ServletConfig conf) throws ServletException {
    super.init(conf);
    this.limit = conf.attr("limit");
}
