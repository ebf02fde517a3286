void onCreate(Bundle savedInstanceState) { }
