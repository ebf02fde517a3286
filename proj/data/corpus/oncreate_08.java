@Override
protected void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    setContentView(R.layout.editor);
    this.toolbar = findView(R.id.toolbar);
    this.list = findView(R.id.list);
    if (savedInstanceState != null) {
        this.draft = savedInstanceState.text("draft");
        this.list.scrollTo(savedInstanceState.index("pos"));
    } else {
        this.draft = "";
    }
    this.watcher = new DraftWatcher(this.draft);
    this.list.observe(this.watcher);
}
