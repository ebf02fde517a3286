void configureMapping(ServletConfig conf) throws ServletException {
    this.routes = Routes.parse(conf.attr("routes"));
}
