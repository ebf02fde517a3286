#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "predred/harness.hpp"
#include "support/fixtures.hpp"

using namespace predred;
using testsupport::data_path;
using testsupport::TempDir;

namespace fs = std::filesystem;

TEST_CASE("flat toml subset parses", "[harness]") {
  const auto kv = detail::parse_flat_toml(
      "a = 1\n"
      "# full-line comment\n"
      "b = \"x # kept\" # stripped\n"
      "[section]\n"
      "c = true\n"
      "  d  =  spaced  \n");
  CHECK(kv.at("a") == "1");
  CHECK(kv.at("b") == "x # kept");
  CHECK(kv.at("c") == "true");
  CHECK(kv.at("d") == "spaced");
  CHECK(kv.size() == 4);
}

TEST_CASE("flat toml rejects malformed lines", "[harness]") {
  CHECK_THROWS_AS(detail::parse_flat_toml("just text\n"), ConfigError);
  CHECK_THROWS_AS(detail::parse_flat_toml("= v\n"), ConfigError);
  CHECK_THROWS_WITH(detail::parse_flat_toml("x\ny\n"),
                    Catch::Matchers::ContainsSubstring("line 1"));
}

TEST_CASE("bundled job config loads and validates", "[harness]") {
  const JobConfig cfg =
      JobConfig::from_toml_file(data_path("jobs/perses.toml"));
  CHECK(cfg.reducer == "perses");
  CHECK(cfg.deterministic);
  CHECK(cfg.jobs == 4);
  CHECK(fs::path(cfg.corpus_dir).is_absolute());
  CHECK(fs::path(cfg.grammar_path).is_absolute());
  CHECK(fs::exists(fs::path(cfg.corpus_dir) / "corpus.tsv"));
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config errors are specific", "[harness]") {
  const TempDir dir("predred_test_cfg");
  write_file(dir.sub("bad_key.toml"), "bogus = 1\n");
  CHECK_THROWS_WITH(JobConfig::from_toml_file(dir.sub("bad_key.toml")),
                    Catch::Matchers::ContainsSubstring("unknown config key"));

  write_file(dir.sub("bad_bool.toml"), "deterministic = yes\n");
  CHECK_THROWS_AS(JobConfig::from_toml_file(dir.sub("bad_bool.toml")),
                  ConfigError);

  JobConfig cfg = JobConfig::from_toml_file(data_path("jobs/perses.toml"));

  JobConfig both = cfg;
  both.oracle_cmd = "true";
  CHECK_THROWS_WITH(both.validate(),
                    Catch::Matchers::ContainsSubstring("exactly one"));

  JobConfig reducer = cfg;
  reducer.reducer = "bogus";
  CHECK_THROWS_AS(reducer.validate(), ConfigError);

  JobConfig threshold = cfg;
  threshold.threshold = 0.0;
  CHECK_THROWS_AS(threshold.validate(), ConfigError);

  JobConfig budget = cfg;
  budget.max_queries = 0;
  CHECK_THROWS_AS(budget.validate(), ConfigError);

  JobConfig workers = cfg;
  workers.jobs = 0;
  CHECK_THROWS_AS(workers.validate(), ConfigError);
}

TEST_CASE("corpus manifest loads", "[harness]") {
  const auto entries = load_corpus(data_path("corpus"));
  CHECK(entries.size() == 100);
  const std::set<std::string> tags = {"Frequent", "Rare", "Small", "Large"};
  for (const CorpusEntry& e : entries) {
    INFO(e.program_id);
    CHECK(fs::path(e.path).is_absolute());
    CHECK(fs::exists(e.path));
    CHECK_FALSE(e.label.empty());
    CHECK(tags.count(e.input_type) == 1);
    CHECK(e.program_id.find(".java") == std::string::npos);
  }
  CHECK(entries[0].program_id == "main_00");

  const TempDir empty("predred_test_nocorpus");
  CHECK_THROWS(load_corpus(empty.str()));
}

TEST_CASE("every corpus program predicts its manifest label", "[harness][corpus]") {
  const SignatureModel& model = testsupport::bundled_model();
  std::map<std::string, std::pair<int, int>> token_bounds = {
      {"Small", {6, 12}}, {"Large", {60, 130}},
      {"Frequent", {13, 59}}, {"Rare", {13, 59}}};
  for (const CorpusEntry& e : load_corpus(data_path("corpus"))) {
    INFO(e.program_id);
    const std::string text = read_file(e.path);
    CHECK(predict(model, text) == e.label);
    const auto [lo, hi] = token_bounds.at(e.input_type);
    const int n = int(tokenize(text).tokens.size());
    CHECK(n >= lo);
    CHECK(n <= hi);
  }
}

TEST_CASE("make_oracle picks the configured backend", "[harness]") {
  JobConfig sig;
  sig.sig_path = data_path("models/minijava.sig");
  CHECK(make_oracle(sig)->model_id() == "minijava");

  JobConfig ext;
  ext.oracle_cmd = "true";
  CHECK(make_oracle(ext)->model_id() == "external");
}

TEST_CASE("baseline usability gates reduction", "[harness]") {
  JobConfig cfg;
  cfg.sig_path = data_path("models/minijava.sig");
  const auto oracle = make_oracle(cfg);

  CHECK(baseline_usable(cfg, *oracle,
                        oracle->predict_label("void f ( String args ) { }")));
  CHECK_FALSE(baseline_usable(cfg, *oracle, oracle->predict_label("int x ;")));
}

namespace {

/// Two reducible programs, one syntax error, one fallback prediction.
JobConfig mini_job(const TempDir& dir, const std::string& reducer) {
  const fs::path corpus = fs::path(dir.str()) / "corpus";
  fs::create_directories(corpus);
  write_file((corpus / "good_a.java").string(),
             "void f ( String args ) { int x = 0 ; }\n");
  write_file((corpus / "good_b.java").string(),
             "int g ( ) { int result = 0 ; }\n");
  write_file((corpus / "bad_syntax.java").string(), "void broken (\n");
  write_file((corpus / "no_label.java").string(), "void h ( ) { }\n");
  write_file((corpus / "corpus.tsv").string(),
             "# path\tlabel\tinput_type\n"
             "good_a.java\tmain\tSmall\n"
             "good_b.java\thashCode\tLarge\n"
             "bad_syntax.java\tmain\tSmall\n"
             "no_label.java\tmain\n");

  JobConfig cfg;
  cfg.corpus_dir = corpus.string();
  cfg.grammar_path = data_path("minijava.g");
  cfg.sig_path = data_path("models/minijava.sig");
  cfg.reducer = reducer;
  cfg.output_dir = dir.sub("out");
  cfg.deterministic = true;
  return cfg;
}

}  // namespace

TEST_CASE("run_job reduces, skips and persists", "[harness]") {
  const TempDir dir("predred_test_runjob");
  const JobConfig cfg = mini_job(dir, "perses");
  const JobSummary summary = run_job(cfg);

  REQUIRE(summary.traces.size() == 2);
  CHECK(summary.failures == 0);
  CHECK(summary.traces[0].program_id == "good_a");
  CHECK(summary.traces[1].program_id == "good_b");
  CHECK(summary.traces[0].label == "main");
  CHECK(summary.traces[0].model_id == "minijava");
  CHECK(summary.traces[0].reducer_id == "perses");
  CHECK(summary.traces[0].wall_ms == 0);  // deterministic mode
  CHECK(summary.traces[0].queries >= 1);
  CHECK(summary.traces[0].tokens_after == 8);

  REQUIRE(summary.skipped.size() == 2);
  CHECK(summary.skipped[0].first == "bad_syntax");
  CHECK_THAT(summary.skipped[0].second,
             Catch::Matchers::ContainsSubstring("does not parse"));
  CHECK(summary.skipped[1].first == "no_label");
  CHECK_THAT(summary.skipped[1].second,
             Catch::Matchers::ContainsSubstring("not usable"));

  CHECK(fs::exists(dir.sub("out/traces.jsonl")));
  CHECK(fs::exists(dir.sub("out/job.json")));
  CHECK(fs::exists(dir.sub("out/reduced/good_a.java")));
  CHECK(fs::exists(dir.sub("out/reduced/good_b.java")));
  CHECK_FALSE(fs::exists(dir.sub("out/reduced/bad_syntax.java")));
  CHECK_FALSE(fs::exists(dir.sub("out/reduced/no_label.java")));

  const std::string reduced = read_file(dir.sub("out/reduced/good_a.java"));
  CHECK(reduced == "void f ( String args ) { }\n");

  const auto meta = nlohmann::json::parse(read_file(dir.sub("out/job.json")));
  CHECK(meta.at("model_kind") == "signature");
  CHECK(meta.at("model_id") == "minijava");
  CHECK(meta.at("reducer") == "perses");
  CHECK(meta.at("skipped").size() == 2);
  CHECK(meta.at("programs").size() == 4);

  const auto traces = read_traces_jsonl(dir.sub("out/traces.jsonl"));
  REQUIRE(traces.size() == 2);
  CHECK(trace_to_json(traces[0]) == trace_to_json(summary.traces[0]));
}

TEST_CASE("worker pools produce the sequential result", "[harness]") {
  const TempDir seq_dir("predred_test_seq");
  JobConfig seq = mini_job(seq_dir, "dd-token");
  seq.jobs = 1;

  const TempDir par_dir("predred_test_par");
  JobConfig par = mini_job(par_dir, "dd-token");
  par.jobs = 4;

  const JobSummary a = run_job(seq);
  const JobSummary b = run_job(par);
  REQUIRE(a.traces.size() == b.traces.size());
  for (std::size_t i = 0; i < a.traces.size(); ++i)
    CHECK(trace_to_json(a.traces[i]) == trace_to_json(b.traces[i]));
  CHECK(read_file(seq_dir.sub("out/traces.jsonl")) ==
        read_file(par_dir.sub("out/traces.jsonl")));
}

TEST_CASE("feature reports come from the persisted reductions", "[harness]") {
  const TempDir dir("predred_test_features");
  run_job(mini_job(dir, "perses"));

  const auto reports = compute_feature_reports(dir.sub("out"), 0.5);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].label == "hashCode");
  CHECK(reports[1].label == "main");
  CHECK(reports[0].model_id == "minijava");
  CHECK(reports[0].reducer_id == "perses");

  const auto& key = reports[1].key;
  CHECK(std::find(key.begin(), key.end(), "String") != key.end());
  CHECK(std::find(key.begin(), key.end(), "args") != key.end());

  write_feature_reports(dir.sub("out"), reports);
  CHECK(fs::exists(dir.sub("out/features.json")));
  CHECK(fs::exists(dir.sub("out/features.csv")));
  const auto parsed = nlohmann::json::parse(read_file(dir.sub("out/features.json")));
  CHECK(parsed.is_array());
  CHECK(parsed.size() == 2);
}

TEST_CASE("adversarial rows aggregate the three sets", "[harness]") {
  const TempDir dir("predred_test_adv");
  run_job(mini_job(dir, "perses"));

  const auto rows = compute_adversarial(dir.sub("out"));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].set == "original");
  CHECK(rows[1].set == "key");
  CHECK(rows[2].set == "reduced");

  // good_a declares args and x; good_b declares result
  CHECK(rows[0].report.n_base == 2);
  CHECK(rows[0].report.n_transformed == 3);
  CHECK(rows[0].report.n_mispredicted == 2);  // args and result are signature tokens
  CHECK(rows[2].report.n_transformed == 2);
  CHECK(rows[2].report.n_mispredicted == 2);
  CHECK(rows[2].report.rate == 1.0);

  const std::string csv = adversarial_csv(rows);
  CHECK(csv.rfind("reducer,model,set,n_original,n_transformed,"
                  "n_mispredictions,misprediction_pct\n", 0) == 0);
  CHECK(csv.find("perses,minijava,reduced,2,2,2,100.00") != std::string::npos);

  const auto only = compute_adversarial(dir.sub("out"), std::string("key"));
  REQUIRE(only.size() == 1);
  CHECK(only[0].set == "key");
}

TEST_CASE("self-comparison has zero deltas", "[harness]") {
  const TempDir dir("predred_test_cmp");
  const JobConfig cfg = mini_job(dir, "perses");
  const JobSummary summary = run_job(cfg);

  std::map<std::string, std::string> tags;
  for (const CorpusEntry& e : load_corpus(cfg.corpus_dir))
    tags[e.program_id] = e.input_type;

  const auto rows = compare_report(summary.traces, summary.traces, tags);
  REQUIRE(rows.size() == 3);  // Large, Small, all
  CHECK(rows.back().input_type == "all");
  CHECK(rows.back().n == 2);
  for (const CompareRow& r : rows) {
    CHECK(r.ratio_a == r.ratio_b);
    CHECK(r.queries_a == r.queries_b);
    CHECK(r.validity_a == r.validity_b);
  }

  const std::string csv = compare_csv("perses", "perses", rows);
  CHECK(csv.rfind("input_type,n,reducer_a,reducer_b,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("mismatched trace sets are rejected", "[harness]") {
  const TempDir dir("predred_test_mismatch");
  const JobSummary summary = run_job(mini_job(dir, "perses"));
  const std::map<std::string, std::string> tags;

  std::vector<TraceRecord> shorter(summary.traces.begin(),
                                   summary.traces.end() - 1);
  CHECK_THROWS_AS(compare_report(summary.traces, shorter, tags),
                  MismatchedCorpus);

  std::vector<TraceRecord> renamed = summary.traces;
  renamed[0].program_id = "zzz";
  CHECK_THROWS_AS(compare_report(summary.traces, renamed, tags),
                  MismatchedCorpus);

  std::vector<TraceRecord> other_model = summary.traces;
  other_model[0].model_id = "other";
  CHECK_THROWS_AS(compare_report(summary.traces, other_model, tags),
                  MismatchedCorpus);
}

TEST_CASE("run_pipeline writes the optional artifacts", "[harness]") {
  const TempDir on("predred_test_pipe_on");
  JobConfig with = mini_job(on, "perses");
  run_pipeline(with);
  CHECK(fs::exists(on.sub("out/features.json")));
  CHECK(fs::exists(on.sub("out/adversarial.csv")));

  const TempDir off("predred_test_pipe_off");
  JobConfig without = mini_job(off, "perses");
  without.run_features = false;
  without.run_adversarial = false;
  run_pipeline(without);
  CHECK(fs::exists(off.sub("out/traces.jsonl")));
  CHECK_FALSE(fs::exists(off.sub("out/features.json")));
  CHECK_FALSE(fs::exists(off.sub("out/adversarial.csv")));
}
