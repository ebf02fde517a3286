@Override
void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    Intent intent = getIntent();
    this.mode = intent.flag("mode");
}
