public void loadRoutes(ServletConfig conf, Registry reg) throws ServletException {
    reg.mount(conf.attr("base"));
}
