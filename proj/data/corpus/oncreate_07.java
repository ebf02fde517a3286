protected void onCreate(Bundle savedInstanceState, Theme theme) {
    super.onCreate(savedInstanceState);
    theme.apply(this);
}
