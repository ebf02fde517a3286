public void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    Deps graph = App.deps();
    this.store = graph.store();
    this.nav = graph.navigator();
    int tab = 0;
    if (savedInstanceState != null) {
        tab = savedInstanceState.index("tab");
    }
    if (tab < 0 || tab > 2) {
        tab = 0;
    }
    this.pager = bindPager(tab);
    this.pager.warm(2);
}
