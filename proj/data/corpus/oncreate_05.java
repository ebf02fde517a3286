public void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    tracker = Analytics.screen("home");
}
