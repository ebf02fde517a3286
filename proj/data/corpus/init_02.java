public void wireServlet(ServletConfig conf) throws ServletException {
    if (conf == null) {
        throw new ServletException("missing conf");
    }
    this.registry = conf.registry();
}
