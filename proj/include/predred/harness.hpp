#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "predred/adversarial.hpp"
#include "predred/ddmin.hpp"
#include "predred/features.hpp"
#include "predred/grammar.hpp"
#include "predred/oracle.hpp"
#include "predred/parser.hpp"
#include "predred/perses.hpp"
#include "predred/trace.hpp"
#include "predred/util.hpp"

namespace predred {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchedCorpus : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --------------------------------------------------------------------------
// Job configuration (flat TOML subset: `key = value`, # comments, optional
// [section] headers which are ignored; strings quoted, ints/floats/bools bare)

namespace detail {

inline std::map<std::string, std::string> parse_flat_toml(
    const std::string& text) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(
        pos, nl == std::string::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    // strip comments (respecting quoted strings)
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_str = !in_str;
      if (line[i] == '#' && !in_str) {
        line.resize(i);
        break;
      }
    }
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[' && t.back() == ']') continue;  // section header
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string val = trim(std::string_view(t).substr(eq + 1));
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
      val = val.substr(1, val.size() - 2);
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) +
                                       ": empty key");
    kv[key] = val;
  }
  return kv;
}

inline bool to_bool(const std::string& v, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError("config key '" + key + "': expected true/false, got '" + v + "'");
}

}  // namespace detail

struct JobConfig {
  std::string corpus_dir;
  std::string grammar_path;
  std::string sig_path;    // builtin model; exactly one of sig_path/oracle_cmd
  std::string oracle_cmd;
  std::string reducer{"perses"};  // perses | dd-token | dd-char
  std::string output_dir;
  int max_queries{50000};
  std::int64_t timeout_ms{10000};
  std::int64_t stall_ms{30000};
  double threshold{0.5};
  bool deterministic{false};
  bool no_replacement{false};
  bool run_features{true};
  bool run_adversarial{true};
  int jobs{1};

  static JobConfig from_toml_file(const std::string& path) {
    namespace fs = std::filesystem;
    const auto kv = detail::parse_flat_toml(read_file(path));
    const fs::path base = fs::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
      if (p.empty()) return p;
      fs::path fp(p);
      return fp.is_absolute() ? fp.string() : (base / fp).lexically_normal().string();
    };

    JobConfig cfg;
    for (const auto& [key, val] : kv) {
      if (key == "corpus_dir") cfg.corpus_dir = resolve(val);
      else if (key == "grammar") cfg.grammar_path = resolve(val);
      else if (key == "model") cfg.sig_path = resolve(val);
      else if (key == "oracle_cmd") cfg.oracle_cmd = val;
      else if (key == "reducer") cfg.reducer = val;
      else if (key == "output_dir") cfg.output_dir = resolve(val);
      else if (key == "max_queries") cfg.max_queries = std::stoi(val);
      else if (key == "timeout_ms") cfg.timeout_ms = std::stoll(val);
      else if (key == "stall_ms") cfg.stall_ms = std::stoll(val);
      else if (key == "threshold") cfg.threshold = std::stod(val);
      else if (key == "deterministic") cfg.deterministic = detail::to_bool(val, key);
      else if (key == "no_replacement") cfg.no_replacement = detail::to_bool(val, key);
      else if (key == "features") cfg.run_features = detail::to_bool(val, key);
      else if (key == "adversarial") cfg.run_adversarial = detail::to_bool(val, key);
      else if (key == "jobs") cfg.jobs = std::stoi(val);
      else throw ConfigError("unknown config key '" + key + "'");
    }
    return cfg;
  }

  void validate() const {
    namespace fs = std::filesystem;
    if (corpus_dir.empty() || !fs::exists(fs::path(corpus_dir) / "corpus.tsv"))
      throw ConfigError("corpus_dir must contain corpus.tsv: '" + corpus_dir + "'");
    if (grammar_path.empty() || !fs::exists(grammar_path))
      throw ConfigError("grammar file not found: '" + grammar_path + "'");
    if (sig_path.empty() == oracle_cmd.empty())
      throw ConfigError("exactly one of model / oracle_cmd is required");
    if (!sig_path.empty() && !fs::exists(sig_path))
      throw ConfigError("model file not found: '" + sig_path + "'");
    if (reducer != "perses" && reducer != "dd-token" && reducer != "dd-char")
      throw ConfigError("reducer must be perses, dd-token or dd-char");
    if (output_dir.empty()) throw ConfigError("output_dir is required");
    if (max_queries <= 0 || timeout_ms <= 0 || stall_ms <= 0)
      throw ConfigError("budgets must be positive");
    if (!(threshold > 0.0 && threshold <= 1.0))
      throw ConfigError("threshold must be in (0,1]");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
  }
};

// --------------------------------------------------------------------------
// Corpus manifest: corpus.tsv lines `path<TAB>label[<TAB>input_type]`

struct CorpusEntry {
  std::string path;        // absolute
  std::string label;
  std::string input_type;  // Frequent/Rare/Small/Large tag, may be empty
  std::string program_id;  // file stem
};

inline std::vector<CorpusEntry> load_corpus(const std::string& corpus_dir) {
  namespace fs = std::filesystem;
  const std::string manifest = (fs::path(corpus_dir) / "corpus.tsv").string();
  const std::string text = read_file(manifest);
  std::vector<CorpusEntry> entries;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string line = trim(text.substr(
        pos, nl == std::string::npos ? text.size() - pos : nl - pos));
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', start);
      cols.push_back(trim(line.substr(
          start, tab == std::string::npos ? line.size() - start : tab - start)));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() < 2)
      throw ConfigError("corpus.tsv line " + std::to_string(line_no) +
                        ": expected 'path<TAB>label[<TAB>input_type]'");
    CorpusEntry e;
    e.path = (fs::path(corpus_dir) / cols[0]).lexically_normal().string();
    e.label = cols[1];
    e.input_type = cols.size() > 2 ? cols[2] : "";
    e.program_id = fs::path(cols[0]).stem().string();
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw ConfigError("corpus.tsv lists no programs");
  return entries;
}

inline std::unique_ptr<Oracle> make_oracle(const JobConfig& cfg) {
  if (!cfg.sig_path.empty())
    return std::make_unique<SignatureOracle>(SignatureModel::load_file(cfg.sig_path));
  return std::make_unique<ExternalOracle>(
      cfg.oracle_cmd, std::chrono::milliseconds(cfg.timeout_ms));
}

inline bool baseline_usable(const JobConfig& cfg, const Oracle& oracle,
                            const Prediction& p) {
  if (p.failure) return false;
  if (!cfg.sig_path.empty()) {
    const auto& model = static_cast<const SignatureOracle&>(oracle).model();
    return p.label != model.fallback_label;
  }
  return p.label == kExternalPreserved;
}

// --------------------------------------------------------------------------
// Reduction phase

struct JobSummary {
  std::vector<TraceRecord> traces;
  std::vector<std::pair<std::string, std::string>> skipped;  // id, reason
  int failures{0};
};

namespace detail {

struct ProgResult {
  bool ok{false};
  bool skipped{false};
  std::string note;  // skip reason or error text
  TraceRecord trace;
  std::string reduced_text;
};

inline ProgResult reduce_one(const JobConfig& cfg, const CorpusEntry& entry,
                             const Parser& parser, Oracle& oracle) {
  ProgResult r;
  std::string text;
  try {
    text = read_file(entry.path);
  } catch (const std::exception& e) {
    r.note = e.what();
    return r;
  }
  const LexResult lexed = tokenize(text);
  if (!lexed.ok()) {
    r.skipped = true;
    r.note = "does not lex (offset " + std::to_string(*lexed.error_offset) + ")";
    return r;
  }
  if (auto err = parser.recognize(lexed.tokens)) {
    r.skipped = true;
    r.note = "does not parse (offset " + std::to_string(*err) + ")";
    return r;
  }
  const Prediction base = oracle.predict_label(text);
  if (!baseline_usable(cfg, oracle, base)) {
    r.skipped = true;
    r.note = "baseline prediction not usable ('" + base.label + "')";
    return r;
  }

  ReductionProblem problem;
  problem.program = text;
  problem.oracle = &oracle;
  problem.baseline = base.label;
  problem.budgets = {cfg.max_queries, std::chrono::milliseconds(cfg.timeout_ms)};

  const auto t0 = std::chrono::steady_clock::now();
  try {
    ReductionOutcome out;
    if (cfg.reducer == "perses") {
      PersesOptions opts;
      opts.no_replacement = cfg.no_replacement;
      out = perses_reduce(problem, parser, opts);
    } else {
      DdConfig dd;
      dd.granularity = cfg.reducer == "dd-token" ? DdConfig::Granularity::Token
                                                 : DdConfig::Granularity::Char;
      dd.budgets = problem.budgets;
      dd.stall_timeout = std::chrono::milliseconds(cfg.stall_ms);
      dd.deterministic = cfg.deterministic;
      out = dd_reduce(problem, dd, parser);
    }
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    r.trace = std::move(out.trace);
    r.trace.program_id = entry.program_id;
    r.trace.label = entry.label;
    r.trace.model_id = oracle.model_id();
    r.trace.wall_ms = cfg.deterministic ? 0 : wall;
    r.reduced_text = std::move(out.reduced_text);
    r.ok = true;
  } catch (const std::exception& e) {
    r.note = e.what();
  }
  return r;
}

inline void write_job_meta(const JobConfig& cfg,
                           const std::vector<CorpusEntry>& entries,
                           const JobSummary& summary,
                           const std::string& model_id) {
  nlohmann::ordered_json j;
  j["schema"] = "predred-job/1";
  j["corpus_dir"] = cfg.corpus_dir;
  j["grammar"] = cfg.grammar_path;
  j["model_kind"] = cfg.sig_path.empty() ? "external" : "signature";
  j["model"] = cfg.sig_path;
  j["oracle_cmd"] = cfg.oracle_cmd;
  j["model_id"] = model_id;
  j["reducer"] = cfg.reducer;
  j["deterministic"] = cfg.deterministic;
  j["no_replacement"] = cfg.no_replacement;
  j["max_queries"] = cfg.max_queries;
  j["timeout_ms"] = cfg.timeout_ms;
  j["stall_ms"] = cfg.stall_ms;
  j["threshold"] = cfg.threshold;
  nlohmann::ordered_json programs = nlohmann::ordered_json::array();
  for (const auto& e : entries) programs.push_back(e.program_id);
  j["programs"] = std::move(programs);
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& [id, reason] : summary.skipped)
    skipped.push_back({{"program_id", id}, {"reason", reason}});
  j["skipped"] = std::move(skipped);
  j["failures"] = summary.failures;
  write_file((std::filesystem::path(cfg.output_dir) / "job.json").string(),
             j.dump(2) + "\n");
}

}  // namespace detail

/// Reduces every usable corpus program, writing traces.jsonl, reduced/*.java
/// and job.json into cfg.output_dir. Unparseable or fallback-predicted
/// programs are skipped (no artifact); per-program errors are isolated.
inline JobSummary run_job(const JobConfig& cfg) {
  namespace fs = std::filesystem;
  cfg.validate();
  const Grammar grammar = Grammar::load(read_file(cfg.grammar_path));
  const Parser parser(grammar);
  const auto oracle_proto = make_oracle(cfg);
  const std::vector<CorpusEntry> entries = load_corpus(cfg.corpus_dir);

  fs::create_directories(fs::path(cfg.output_dir) / "reduced");

  std::vector<detail::ProgResult> results(entries.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    // Each worker owns its oracle handle; the signature model is immutable
    // and the external command is re-spawned per query, so a per-worker
    // clone just isolates in-flight queries.
    const std::unique_ptr<Oracle> oracle = make_oracle(cfg);
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= entries.size()) break;
      results[i] = detail::reduce_one(cfg, entries[i], parser, *oracle);
    }
  };
  const int n_workers =
      std::max(1, std::min<int>(cfg.jobs, static_cast<int>(entries.size())));
  if (n_workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  JobSummary summary;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    detail::ProgResult& r = results[i];
    if (r.ok) {
      write_file((fs::path(cfg.output_dir) / "reduced" /
                  (entries[i].program_id + ".java"))
                     .string(),
                 r.reduced_text + "\n");
      summary.traces.push_back(std::move(r.trace));
    } else if (r.skipped) {
      std::fprintf(stderr, "skip %s: %s\n", entries[i].program_id.c_str(),
                   r.note.c_str());
      summary.skipped.emplace_back(entries[i].program_id, r.note);
    } else {
      std::fprintf(stderr, "fail %s: %s\n", entries[i].program_id.c_str(),
                   r.note.c_str());
      ++summary.failures;
    }
  }
  write_traces_jsonl((fs::path(cfg.output_dir) / "traces.jsonl").string(),
                     summary.traces);
  detail::write_job_meta(cfg, entries, summary, oracle_proto->model_id());
  return summary;
}

// --------------------------------------------------------------------------
// Trace-directory metadata (written by run_job, consumed by the other
// pipeline stages and the standalone CLI subcommands)

struct JobMeta {
  std::string corpus_dir, grammar, model, oracle_cmd, model_id, reducer;
  std::string model_kind;
  bool deterministic{false};
  double threshold{0.5};
  std::int64_t timeout_ms{10000};
};

inline JobMeta load_job_meta(const std::string& traces_dir) {
  const auto j = nlohmann::json::parse(read_file(
      (std::filesystem::path(traces_dir) / "job.json").string()));
  JobMeta m;
  m.corpus_dir = j.at("corpus_dir").get<std::string>();
  m.grammar = j.at("grammar").get<std::string>();
  m.model = j.at("model").get<std::string>();
  m.oracle_cmd = j.at("oracle_cmd").get<std::string>();
  m.model_id = j.at("model_id").get<std::string>();
  m.model_kind = j.at("model_kind").get<std::string>();
  m.reducer = j.at("reducer").get<std::string>();
  m.deterministic = j.at("deterministic").get<bool>();
  m.threshold = j.at("threshold").get<double>();
  m.timeout_ms = j.at("timeout_ms").get<std::int64_t>();
  return m;
}

inline std::unique_ptr<Oracle> make_oracle(const JobMeta& meta) {
  if (meta.model_kind == "signature")
    return std::make_unique<SignatureOracle>(SignatureModel::load_file(meta.model));
  return std::make_unique<ExternalOracle>(
      meta.oracle_cmd, std::chrono::milliseconds(meta.timeout_ms));
}

// --------------------------------------------------------------------------
// Features phase

inline std::vector<FeatureReport> compute_feature_reports(
    const std::string& traces_dir, double threshold) {
  namespace fs = std::filesystem;
  const JobMeta meta = load_job_meta(traces_dir);
  const Grammar grammar = Grammar::load(read_file(meta.grammar));
  const Parser parser(grammar);
  const auto traces = read_traces_jsonl(
      (fs::path(traces_dir) / "traces.jsonl").string());

  std::map<std::string, std::vector<std::string>> by_label;
  for (const TraceRecord& t : traces) {
    const std::string path =
        (fs::path(traces_dir) / "reduced" / (t.program_id + ".java")).string();
    by_label[t.label].push_back(read_file(path));
  }
  std::vector<FeatureReport> reports;
  for (const auto& [label, texts] : by_label) {
    FeatureReport r = aggregate(label, texts, threshold, parser);
    r.model_id = meta.model_id;
    r.reducer_id = meta.reducer;
    reports.push_back(std::move(r));
  }
  return reports;
}

inline void write_feature_reports(const std::string& dir,
                                  const std::vector<FeatureReport>& reports) {
  namespace fs = std::filesystem;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const FeatureReport& r : reports) arr.push_back(feature_report_to_json(r));
  write_file((fs::path(dir) / "features.json").string(), arr.dump(2) + "\n");
  write_file((fs::path(dir) / "features.csv").string(), features_csv(reports));
}

// --------------------------------------------------------------------------
// Adversarial phase

struct AdversarialRow {
  std::string reducer, model, set;
  AdversarialReport report;
};

inline std::vector<AdversarialRow> compute_adversarial(
    const std::string& traces_dir,
    const std::optional<std::string>& set_filter = std::nullopt) {
  namespace fs = std::filesystem;
  const JobMeta meta = load_job_meta(traces_dir);
  const Grammar grammar = Grammar::load(read_file(meta.grammar));
  const Parser parser(grammar);
  const auto oracle = make_oracle(meta);
  const auto traces = read_traces_jsonl(
      (fs::path(traces_dir) / "traces.jsonl").string());
  const std::vector<FeatureReport> reports =
      compute_feature_reports(traces_dir, meta.threshold);
  std::map<std::string, const FeatureReport*> report_of;
  for (const FeatureReport& r : reports) report_of[r.label] = &r;

  std::map<std::string, std::string> path_of;
  for (const CorpusEntry& e : load_corpus(meta.corpus_dir))
    path_of[e.program_id] = e.path;

  AdversarialReport totals[3];
  const char* kinds[3] = {"original", "key", "reduced"};
  for (int k = 0; k < 3; ++k) {
    totals[k].set_kind = kinds[k];
    totals[k].n_base = 0;
  }

  for (const TraceRecord& t : traces) {
    const auto path_it = path_of.find(t.program_id);
    if (path_it == path_of.end()) continue;
    const ParseResult original = parse_text(parser, read_file(path_it->second));
    if (!original.ok()) continue;
    const std::string reduced_text = read_file(
        (fs::path(traces_dir) / "reduced" / (t.program_id + ".java")).string());
    const ParseResult reduced = parse_text(parser, reduced_text);

    const Prediction base = oracle->predict_label(render(*original.tree));
    const AdversarialSets sets = build_sets(
        *original.tree, reduced.ok() ? reduced.tree.get() : nullptr,
        *report_of.at(t.label));
    const std::vector<std::string>* lists[3] = {&sets.original, &sets.key,
                                                &sets.reduced};
    for (int k = 0; k < 3; ++k)
      merge_into(totals[k], misprediction_stats(*oracle, base.label,
                                                *lists[k], kinds[k]));
  }

  std::vector<AdversarialRow> rows;
  for (int k = 0; k < 3; ++k) {
    if (set_filter && *set_filter != kinds[k]) continue;
    rows.push_back({meta.reducer, meta.model_id, kinds[k], totals[k]});
  }
  return rows;
}

inline std::string adversarial_csv(const std::vector<AdversarialRow>& rows) {
  std::string csv =
      "reducer,model,set,n_original,n_transformed,n_mispredictions,"
      "misprediction_pct\n";
  char pct[32];
  for (const AdversarialRow& r : rows) {
    std::snprintf(pct, sizeof pct, "%.2f", r.report.rate * 100.0);
    csv += r.reducer + "," + r.model + "," + r.set + "," +
           std::to_string(r.report.n_base) + "," +
           std::to_string(r.report.n_transformed) + "," +
           std::to_string(r.report.n_mispredicted) + "," + pct + "\n";
  }
  return csv;
}

// --------------------------------------------------------------------------
// Comparison report (two trace sets over the same corpus and model)

struct CompareRow {
  std::string input_type;
  int n{0};
  double ratio_a{0}, ratio_b{0};
  double queries_a{0}, queries_b{0};
  double wall_a{0}, wall_b{0};
  double validity_a{0}, validity_b{0};
};

inline std::vector<CompareRow> compare_report(
    const std::vector<TraceRecord>& a, const std::vector<TraceRecord>& b,
    const std::map<std::string, std::string>& input_type_of) {
  std::map<std::string, const TraceRecord*> bm;
  for (const TraceRecord& t : b) bm[t.program_id] = &t;
  if (a.size() != b.size())
    throw MismatchedCorpus("trace sets cover different programs");

  struct Acc {
    int n{0};
    double ratio_a{0}, ratio_b{0}, queries_a{0}, queries_b{0}, wall_a{0}, wall_b{0};
    std::int64_t valid_a{0}, total_a{0}, valid_b{0}, total_b{0};
  };
  std::map<std::string, Acc> buckets;

  for (const TraceRecord& ta : a) {
    const auto it = bm.find(ta.program_id);
    if (it == bm.end())
      throw MismatchedCorpus("program " + ta.program_id + " missing from B");
    const TraceRecord& tb = *it->second;
    if (ta.model_id != tb.model_id)
      throw MismatchedCorpus("trace sets use different models");
    auto tag_it = input_type_of.find(ta.program_id);
    const std::string tag =
        tag_it != input_type_of.end() && !tag_it->second.empty()
            ? tag_it->second
            : "untagged";
    for (const std::string& key : {tag, std::string("all")}) {
      Acc& acc = buckets[key];
      ++acc.n;
      acc.ratio_a += ta.reduction_ratio;
      acc.ratio_b += tb.reduction_ratio;
      acc.queries_a += ta.queries;
      acc.queries_b += tb.queries;
      acc.wall_a += static_cast<double>(ta.wall_ms);
      acc.wall_b += static_cast<double>(tb.wall_ms);
      acc.valid_a += ta.candidates_valid;
      acc.total_a += ta.candidates_total;
      acc.valid_b += tb.candidates_valid;
      acc.total_b += tb.candidates_total;
    }
  }

  std::vector<CompareRow> rows;
  for (const auto& [tag, acc] : buckets) {
    CompareRow r;
    r.input_type = tag;
    r.n = acc.n;
    r.ratio_a = acc.ratio_a / acc.n;
    r.ratio_b = acc.ratio_b / acc.n;
    r.queries_a = acc.queries_a / acc.n;
    r.queries_b = acc.queries_b / acc.n;
    r.wall_a = acc.wall_a / acc.n;
    r.wall_b = acc.wall_b / acc.n;
    r.validity_a = acc.total_a ? static_cast<double>(acc.valid_a) / acc.total_a : 0;
    r.validity_b = acc.total_b ? static_cast<double>(acc.valid_b) / acc.total_b : 0;
    rows.push_back(r);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CompareRow& x, const CompareRow& y) {
                     if ((x.input_type == "all") != (y.input_type == "all"))
                       return y.input_type == "all";
                     return x.input_type < y.input_type;
                   });
  return rows;
}

inline std::string compare_csv(const std::string& reducer_a,
                               const std::string& reducer_b,
                               const std::vector<CompareRow>& rows) {
  std::string csv =
      "input_type,n,reducer_a,reducer_b,mean_ratio_a,mean_ratio_b,"
      "mean_queries_a,mean_queries_b,mean_wall_ms_a,mean_wall_ms_b,"
      "validity_a,validity_b\n";
  char buf[200];
  for (const CompareRow& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%s,%d,%s,%s,%.4f,%.4f,%.2f,%.2f,%.2f,%.2f,%.4f,%.4f\n",
                  r.input_type.c_str(), r.n, reducer_a.c_str(),
                  reducer_b.c_str(), r.ratio_a, r.ratio_b, r.queries_a,
                  r.queries_b, r.wall_a, r.wall_b, r.validity_a, r.validity_b);
    csv += buf;
  }
  return csv;
}

inline nlohmann::ordered_json compare_json(const std::string& reducer_a,
                                           const std::string& reducer_b,
                                           const std::vector<CompareRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CompareRow& r : rows) {
    nlohmann::ordered_json j;
    j["input_type"] = r.input_type;
    j["n"] = r.n;
    j["reducer_a"] = reducer_a;
    j["reducer_b"] = reducer_b;
    j["mean_ratio_a"] = r.ratio_a;
    j["mean_ratio_b"] = r.ratio_b;
    j["mean_queries_a"] = r.queries_a;
    j["mean_queries_b"] = r.queries_b;
    j["mean_wall_ms_a"] = r.wall_a;
    j["mean_wall_ms_b"] = r.wall_b;
    j["validity_a"] = r.validity_a;
    j["validity_b"] = r.validity_b;
    arr.push_back(std::move(j));
  }
  return arr;
}

/// Full pipeline for one config: reduce, then (optionally) features and
/// adversarial, all rooted at cfg.output_dir.
inline JobSummary run_pipeline(const JobConfig& cfg) {
  JobSummary summary = run_job(cfg);
  if (cfg.run_features && !summary.traces.empty())
    write_feature_reports(cfg.output_dir,
                          compute_feature_reports(cfg.output_dir, cfg.threshold));
  if (cfg.run_adversarial && !summary.traces.empty()) {
    const auto rows = compute_adversarial(cfg.output_dir);
    write_file((std::filesystem::path(cfg.output_dir) / "adversarial.csv").string(),
               adversarial_csv(rows));
  }
  return summary;
}

}  // namespace predred
