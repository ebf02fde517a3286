void initFilter(ServletConfig conf) throws ServletException {
    this.pattern = conf.attr("pattern");
}
