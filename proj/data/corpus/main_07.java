private static void startApp(String args, Env env) {
    env.load();
    Handler.handle(args, env);
}
