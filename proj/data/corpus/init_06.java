void wire6(ServletConfig conf) throws ServletException { }
