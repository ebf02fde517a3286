void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    bindViews();
    presenter.attach(this);
}
