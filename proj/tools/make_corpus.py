#!/usr/bin/env python3
"""Regenerates the bundled corpus under data/corpus/.

Each label ships 10 programs whose prediction is planted via two signature
tokens (see data/models/minijava.sig). Index 6 is the Small variant
(<= 12 tokens), indices 8-9 are Large (60-130 tokens), the rest are
medium-sized and tagged Frequent or Rare per label.

The script validates, before writing anything, that every program
- matches exactly its own label's signature (no foreign-signature leaks),
- stays inside the token budget of its size tag.
"""

import re
import sys
from pathlib import Path

KEYWORDS = {
    "public", "private", "protected", "static", "final", "abstract",
    "synchronized", "void", "int", "boolean", "char", "long", "double",
    "float", "byte", "short", "if", "else", "return", "throw", "throws",
    "try", "catch", "new", "super", "instanceof", "true", "false", "null",
    "this",
}

TOKEN_RE = re.compile(
    r'"(?:[^"\\\n]|\\.)*"'
    r"|[A-Za-z_$][A-Za-z0-9_$]*"
    r"|\d+"
    r"|==|!=|<=|>=|&&|\|\|"
    r"|[@=+\-*/%<>!.,;(){}\[\]]"
)

SIGNATURES = {
    "main": {"String", "args"},
    "equals": {"boolean", "obj"},
    "setUp": {"setUp", "Exception"},
    "onCreate": {"onCreate", "savedInstanceState"},
    "toString": {"StringBuilder", "sb"},
    "run": {"work", "retry"},
    "hashCode": {"int", "result"},
    "init": {"ServletException", "conf"},
    "execute": {"BuildException", "cmd"},
    "get": {"T", "key"},
}

FREQUENT = {"main", "equals", "setUp", "onCreate", "toString"}


def tokens_of(text):
    stripped = re.sub(r"//[^\n]*", " ", text)
    stripped = re.sub(r"/\*.*?\*/", " ", stripped, flags=re.S)
    return TOKEN_RE.findall(stripped)


PROGRAMS = {
    # ---------------------------------------------------------------- main
    "main": [
        '''public static void f(String[] args) {
    System.setProperty(Constants.DUBBO_PROPERTIES_KEY, "conf/dubbo.properties");
    Main.main(args);
}
''',
        '''public static void launch(String[] args) {
    Runtime.init(args);
    log.info("started");
}
''',
        '''static void bootstrap(String args) {
    if (args == null) {
        return;
    }
    Server.start(args, 8080);
}
''',
        '''public void runCli(String[] args, PrintStream out) {
    out.println(args[0]);
    out.flush();
}
''',
        '''void entry(String args) {
    int code = Launcher.dispatch(args);
    System.exit(code);
}
''',
        '''public static synchronized void boot(String[] args) {
    Config cfg = Config.parse(args);
    App.run(cfg);
}
''',
        '''void m6(String args) { }
''',
        '''private static void startApp(String args, Env env) {
    env.load();
    Handler.handle(args, env);
}
''',
        '''public static void mainEntry(String[] args) {
    if (args.length == 0) {
        System.err.println("usage: app <conf-file>");
        return;
    }
    String home = System.getProperty("app.home");
    if (home == null) {
        home = Paths.fallback();
    }
    try {
        Bootstrap loader = new Bootstrap(home);
        loader.install(args);
        loader.verify();
    } catch (IOException io) {
        System.err.println(io.getMessage());
    }
    Registry.publish(home, args);
}
''',
        '''static void dispatch(String args, Channel chan) {
    Message msg = Codec.decode(args);
    if (msg == null) {
        chan.close();
        return;
    }
    if (msg.kind() == 2) {
        chan.reply(msg, true);
    } else {
        Queue q = Broker.lookup(msg.topic());
        q.offer(msg);
        chan.ack(args, q.size());
    }
    Metrics.count("dispatch", 1);
}
''',
    ],
    # -------------------------------------------------------------- equals
    "equals": [
        '''@Override
public boolean sameAs(Object obj) {
    if (obj == this) {
        return true;
    }
    return false;
}
''',
        '''public boolean matches(Object obj) {
    if (!(obj instanceof Point)) {
        return false;
    }
    return this.x == obj.hash();
}
''',
        '''boolean isEqual(Object obj, boolean strict) {
    if (strict) {
        return this.id == obj;
    }
    return true;
}
''',
        '''public final boolean equalTo(Object obj) {
    boolean same = this.name == obj;
    return same;
}
''',
        '''boolean compareRef(Object obj) {
    if (obj == null) {
        return false;
    }
    return Helper.identity(this) == Helper.identity(obj);
}
''',
        '''public boolean checks(Object obj) {
    int mask = this.bits % 16;
    return mask == obj.code();
}
''',
        '''boolean eq6(Object obj) { }
''',
        '''@Override
public synchronized boolean deepEquals(Object obj) {
    return this.inner.same(obj) && !this.closed;
}
''',
        '''@Override
public boolean looksLike(Object obj) {
    if (obj == this) {
        return true;
    }
    if (!(obj instanceof Record)) {
        return false;
    }
    Record other = Cast.toRecord(obj);
    if (other.size() != this.size()) {
        return false;
    }
    int i = this.cursor;
    if (i > 0) {
        i = i - 1;
    }
    boolean head = this.first == other.first;
    boolean tail = this.last == other.last;
    return head && tail;
}
''',
        '''public boolean identical(Object obj, Trace tracer) {
    if (obj == null) {
        tracer.note("null rhs");
        return false;
    }
    long lhs = this.stamp / 1000;
    long rhs = Clock.stampOf(obj) / 1000;
    if (lhs != rhs) {
        tracer.note("stamp drift");
        return false;
    }
    if (this.tag != obj) {
        return this.weight >= Limits.floor(obj);
    }
    return true;
}
''',
    ],
    # --------------------------------------------------------------- setUp
    "setUp": [
        '''@Before
public void setUp() throws Exception {
    this.repo = new MemoryRepo();
    this.repo.start();
}
''',
        '''public void setUp() throws Exception {
    db = Database.open("test.db");
    db.migrate(3);
}
''',
        '''protected void setUp() throws Exception {
    super.setUp();
    this.client = HttpStub.create();
}
''',
        '''void setUp() throws Exception {
    tmp = Files.createTempDir("fixtures");
    seed(tmp, 42);
}
''',
        '''public void setUp() throws Exception, TimeoutError {
    pool = new WorkerPool(4);
    pool.warm();
}
''',
        '''@Before
void setUp() throws Exception {
    if (fixtures == null) {
        fixtures = Loader.load("seed.json");
    }
}
''',
        '''void setUp() throws Exception { }
''',
        '''public final void setUp() throws Exception {
    this.bus = new EventBus();
    this.bus.register(this, 1);
}
''',
        '''@Before
public void setUp() throws Exception {
    this.dir = Files.createTempDir("store");
    Config base = Config.defaults();
    base.put("path", this.dir);
    base.put("fsync", false);
    this.store = new KvStore(base);
    this.store.open();
    if (!this.store.healthy()) {
        throw new IllegalStateException("bad fixture");
    }
    this.clock = new FakeClock(0);
    this.store.attach(this.clock);
}
''',
        '''protected void setUp() throws Exception {
    super.setUp();
    this.server = ServerStub.bind(0);
    int port = this.server.port();
    this.url = Urls.local(port);
    this.mailbox = new Mailbox(16);
    try {
        this.server.start();
    } catch (BindError be) {
        this.server = ServerStub.bind(port + 1);
        this.server.start();
    }
    Health.await(this.url, 500);
}
''',
    ],
    # ------------------------------------------------------------ onCreate
    "onCreate": [
        '''@Override
protected void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    setContentView(R.layout.activity_main);
}
''',
        '''@Override
public void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    this.adapter = new ListAdapter(this);
}
''',
        '''protected void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    if (savedInstanceState != null) {
        restore(savedInstanceState);
    }
}
''',
        '''void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    bindViews();
    presenter.attach(this);
}
''',
        '''@Override
void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    Intent intent = getIntent();
    this.mode = intent.flag("mode");
}
''',
        '''public void onCreate(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    tracker = Analytics.screen("home");
}
''',
        '''void onCreate(Bundle savedInstanceState) { }
''',
        '''protected void onCreate(Bundle savedInstanceState, Theme theme) {
    super.onCreate(savedInstanceState);
    theme.apply(this);
}
''',
        '''@Override
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
''',
        '''public void onCreate(Bundle savedInstanceState) {
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
''',
    ],
    # ------------------------------------------------------------ toString
    "toString": [
        '''@Override
public String describe() {
    StringBuilder sb;
    sb = new StringBuilder();
    sb.append(this.name);
    return sb.toString();
}
''',
        '''public String render() {
    StringBuilder sb;
    sb = Buffers.acquire();
    sb.append("{}");
    return sb.toString();
}
''',
        '''String dump(int depth) {
    StringBuilder sb;
    sb = new StringBuilder(depth);
    sb.append(depth);
    return sb.toString();
}
''',
        '''public String text() {
    StringBuilder sb;
    sb = new StringBuilder("id=");
    sb.append(this.id);
    return sb.toString();
}
''',
        '''@Override
public String printed() {
    StringBuilder sb;
    sb = new StringBuilder();
    sb.append(this.head).append(this.tail);
    return sb.toString();
}
''',
        '''String summary() {
    StringBuilder sb;
    sb = new StringBuilder(64);
    sb.append(count).append("items");
    return sb.toString();
}
''',
        '''String str6() { StringBuilder sb; }
''',
        '''public final String format(char sep) {
    StringBuilder sb;
    sb = new StringBuilder();
    sb.append(left).append(sep).append(right);
    return sb.toString();
}
''',
        '''@Override
public String display() {
    StringBuilder sb;
    sb = new StringBuilder("Order[");
    sb.append(this.id);
    if (this.tags.size() > 0) {
        sb.append(",tags=");
        sb.append(this.tags.join("+"));
    }
    if (this.open) {
        sb.append(",open");
    } else {
        sb.append(",closed");
        sb.append(this.closedAt);
    }
    sb.append("]");
    return sb.toString();
}
''',
        '''public String explain(boolean verbose) {
    StringBuilder sb;
    sb = new StringBuilder();
    sb.append(this.kind);
    sb.append("#");
    sb.append(this.seq);
    if (verbose) {
        sb.append(" at ");
        sb.append(this.site.file());
        sb.append(":");
        sb.append(this.site.line());
    }
    if (this.cause != null) {
        sb.append(" cause=");
        sb.append(this.cause);
    }
    return sb.toString();
}
''',
    ],
    # ----------------------------------------------------------------- run
    "run": [
        '''public void processQueue() {
    try {
        work();
    } catch (Exception e) {
        retry();
    }
}
''',
        '''void drainOnce(Queue q) {
    try {
        work(q.next());
    } catch (Exception e) {
        retry(q);
    }
}
''',
        '''public void spinLoop(int rounds) {
    log.debug("spin");
    try {
        work(rounds);
    } catch (Exception e) {
        retry();
    }
}
''',
        '''void pollJobs() {
    try {
        bus.flush();
        work();
    } catch (Exception e) {
        retry();
        metrics.bump("retries");
    }
}
''',
        '''public synchronized void tickOnce() {
    try {
        work(this.batch);
    } catch (Exception e) {
        retry(this.batch, e);
    }
}
''',
        '''void cycleTasks(Scheduler sched) {
    if (sched.idle()) {
        return;
    }
    try {
        work(sched.take());
    } catch (Exception e) {
        retry(sched);
    }
}
''',
        '''void run6() { work; retry; }
''',
        '''public void pumpEvents() {
    try {
        gate.acquire();
        work();
    } catch (Exception e) {
        audit(e);
        retry();
    }
}
''',
        '''public void churn(Batch batch, Limiter limiter) {
    int budget = limiter.permits();
    if (budget <= 0) {
        return;
    }
    try {
        prepare(batch);
        work(batch, budget);
        commit(batch);
    } catch (Exception e) {
        rollback(batch);
        if (limiter.canRetry(e)) {
            retry(batch);
        }
        report(e);
    }
}
''',
        '''void grindBatch(Feed feed) {
    Cursor cur = feed.open();
    int seen = 0;
    try {
        if (cur.hasNext()) {
            stage(cur.next());
            seen = seen + 1;
        }
        work(cur, seen);
        cur.close();
    } catch (Exception e) {
        tracer.log("grind failed", e);
        cur.close();
        retry(feed);
    }
}
''',
    ],
    # ------------------------------------------------------------ hashCode
    "hashCode": [
        '''@Override
public int hashMix() {
    int result;
    result = 17;
    result = result * 31 + this.id;
    return result;
}
''',
        '''public int codeOf() {
    int result;
    result = this.x;
    result = result * 31 + this.y;
    return result;
}
''',
        '''int mix(int seed) {
    int result;
    result = seed % 97;
    return result;
}
''',
        '''public int bucketOf() {
    int result;
    result = this.name.hash() / 7;
    return result;
}
''',
        '''int fold() {
    int result;
    result = this.hi - this.lo;
    if (result < 0) {
        result = -result;
    }
    return result;
}
''',
        '''public int digest() {
    int result;
    result = Seeds.base();
    result = result * 31 + this.tag;
    return result;
}
''',
        '''int h6() { int result; }
''',
        '''@Override
public int stamp() {
    int result;
    result = this.low;
    result = result * 31 + this.high;
    return result;
}
''',
        '''@Override
public int signatureOf() {
    int result;
    result = 1;
    result = result * 31 + this.kind;
    result = result * 31 + this.arity;
    if (this.owner != null) {
        result = result * 31 + this.owner.code();
    }
    if (this.flags % 2 == 0) {
        result = result + 7;
    } else {
        result = result - 7;
    }
    return result;
}
''',
        '''public int checksum(byte depth) {
    int result;
    result = this.seed;
    int cursor = 0;
    if (depth > 0) {
        cursor = this.table.probe(depth);
        result = result * 131 + cursor;
    }
    if (!this.sealed) {
        result = result + this.salt;
    }
    result = result % 65521;
    return result;
}
''',
    ],
    # ---------------------------------------------------------------- init
    "init": [
        '''public void bindConfig(ServletConfig conf) throws ServletException {
    super.init(conf);
    this.limit = conf.attr("limit");
}
''',
        '''void initFilter(ServletConfig conf) throws ServletException {
    this.pattern = conf.attr("pattern");
}
''',
        '''public void wireServlet(ServletConfig conf) throws ServletException {
    if (conf == null) {
        throw new ServletException("missing conf");
    }
    this.registry = conf.registry();
}
''',
        '''void configureMapping(ServletConfig conf) throws ServletException {
    this.routes = Routes.parse(conf.attr("routes"));
}
''',
        '''public void loadRoutes(ServletConfig conf, Registry reg) throws ServletException {
    reg.mount(conf.attr("base"));
}
''',
        '''public synchronized void prepareCtx(ServletConfig conf) throws ServletException, IOException {
    this.ctx = conf.context();
    this.ctx.warm();
}
''',
        '''void wire6(ServletConfig conf) throws ServletException { }
''',
        '''void hookLifecycle(ServletConfig conf) throws ServletException {
    super.init(conf);
    Hooks.register(this, conf.name());
}
''',
        '''public void bootFilter(ServletConfig conf) throws ServletException {
    super.init(conf);
    String mode = conf.attr("mode");
    if (mode == null) {
        mode = "strict";
    }
    this.strict = mode == "strict";
    this.quota = Quotas.parse(conf.attr("quota"), 100);
    if (this.quota < 0) {
        throw new ServletException("bad quota");
    }
    this.meter = new Meter(this.quota);
    Filters.attach(conf.context(), this);
}
''',
        '''public void initGateway(ServletConfig conf) throws ServletException {
    this.pool = Pools.sized(conf.attr("threads"), 8);
    this.router = new Router();
    this.router.fallback("404");
    try {
        this.keys = KeyStore.open(conf.attr("keys"));
    } catch (IOException io) {
        throw new ServletException("keystore unavailable");
    }
    this.ready = true;
    Gateways.announce(this, conf.name());
}
''',
    ],
    # ------------------------------------------------------------- execute
    "execute": [
        '''public void runTarget(String cmd) {
    log.info(cmd);
    throw new BuildException(cmd);
}
''',
        '''void failBuild(String cmd, int code) {
    if (code != 0) {
        throw new BuildException(cmd);
    }
}
''',
        '''public void antTask(String cmd) {
    Process p = Shell.spawn(cmd);
    if (p.waitCode() != 0) {
        throw new BuildException(cmd);
    }
}
''',
        '''void execTool(String cmd) {
    int status = Runner.call(cmd, 30);
    if (status == 2) {
        throw new BuildException(cmd);
    }
    Logs.note("tool ok");
}
''',
        '''public void launchChain(String cmd) {
    this.attempts = this.attempts + 1;
    throw new BuildException(cmd);
}
''',
        '''void shellOut(String cmd, Env env) {
    env.export("CMD_LINE");
    throw new BuildException(cmd);
}
''',
        '''void x6(BuildException cmd) { }
''',
        '''public void compileStep(String cmd) {
    Sources src = Sources.scan("src");
    this.compiler.run(src);
    throw new BuildException(cmd);
}
''',
        '''public void packageJar(String cmd, Manifest mf) {
    Archive arc = new Archive("out.jar");
    arc.stamp(mf.version());
    int added = arc.addTree("classes");
    if (added == 0) {
        arc.abort();
        throw new BuildException(cmd);
    }
    arc.seal(mf);
    Artifacts.record(arc.digest(), added);
}
''',
        '''void deployKit(String cmd) {
    Plan plan = Plans.parse(cmd);
    if (plan == null) {
        throw new BuildException(cmd);
    }
    try {
        Uploader up = new Uploader(plan.host());
        up.push(plan.bundle());
        up.finish();
    } catch (IOException io) {
        Cleanup.sweep(plan);
        throw new BuildException(cmd);
    }
    Audit.log("deploy", plan.host());
}
''',
    ],
    # ----------------------------------------------------------------- get
    "get": [
        '''public T lookup(String key) {
    return this.table.get(key);
}
''',
        '''T fetch(String key, T fallback) {
    T hit = this.map.get(key);
    if (hit == null) {
        return fallback;
    }
    return hit;
}
''',
        '''public T readEntry(String key) {
    Entry e = this.index.seek(key);
    if (e == null) {
        return null;
    }
    return e.value();
}
''',
        '''T resolve(String key) {
    if (this.frozen) {
        return this.snapshot.get(key);
    }
    return this.live.get(key);
}
''',
        '''public synchronized T findOne(String key) {
    this.reads = this.reads + 1;
    return this.store.get(key);
}
''',
        '''T cached(String key, long ttl) {
    this.sweepIfOlder(ttl);
    return this.cache.get(key);
}
''',
        '''T g6(String key) { }
''',
        '''public T takeValue(String key) {
    T found = this.bag.remove(key);
    return found;
}
''',
        '''public T loadOrNull(String key, Loader loader) {
    T hit = this.primary.get(key);
    if (hit != null) {
        this.hits = this.hits + 1;
        return hit;
    }
    this.misses = this.misses + 1;
    T loaded = loader.load(key);
    if (loaded == null) {
        return null;
    }
    this.primary.put(key, loaded);
    if (this.primary.size() > this.cap) {
        this.primary.evictOldest();
    }
    return loaded;
}
''',
        '''T peekAt(String key) {
    Shard shard = this.shards[this.spread(key)];
    if (shard == null) {
        return null;
    }
    Slot slot = shard.probe(key);
    if (slot == null || slot.expired(this.now())) {
        this.stale = this.stale + 1;
        return null;
    }
    return slot.read();
}
''',
    ],
}

FILE_PREFIX = {
    "main": "main", "equals": "equals", "setUp": "setup",
    "onCreate": "oncreate", "toString": "tostring", "run": "run",
    "hashCode": "hash", "init": "init", "execute": "exec", "get": "get",
}


def tag_for(label, idx):
    if idx == 6:
        return "Small"
    if idx in (8, 9):
        return "Large"
    return "Frequent" if label in FREQUENT else "Rare"


def predicted_label(tokens):
    toks = set(tokens)
    hits = [lbl for lbl, sig in SIGNATURES.items() if sig <= toks]
    return sorted(hits)[0] if hits else None


def validate(label, idx, text):
    toks = tokens_of(text)
    n = len(toks)
    tag = tag_for(label, idx)
    bounds = {"Small": (5, 12), "Large": (60, 130),
              "Frequent": (13, 59), "Rare": (13, 59)}[tag]
    ok = True
    if not bounds[0] <= n <= bounds[1]:
        print(f"{label}[{idx}] ({tag}): {n} tokens outside {bounds}")
        ok = False
    hits = [lbl for lbl, sig in SIGNATURES.items() if sig <= set(toks)]
    if hits != [label]:
        print(f"{label}[{idx}]: signature hits {hits}, want [{label}]")
        ok = False
    return ok


def main():
    root = Path(__file__).resolve().parent.parent
    corpus_dir = root / "data" / "corpus"
    corpus_dir.mkdir(parents=True, exist_ok=True)

    ok = True
    manifest = []
    for label, programs in PROGRAMS.items():
        assert len(programs) == 10, label
        for idx, text in enumerate(programs):
            ok &= validate(label, idx, text)
            name = f"{FILE_PREFIX[label]}_{idx:02d}.java"
            manifest.append((name, label, tag_for(label, idx), text))
    if not ok:
        sys.exit(1)

    lines = []
    for name, label, tag, text in manifest:
        (corpus_dir / name).write_text(text)
        lines.append(f"{name}\t{label}\t{tag}")
    (corpus_dir / "corpus.tsv").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(manifest)} programs to {corpus_dir}")


if __name__ == "__main__":
    main()
