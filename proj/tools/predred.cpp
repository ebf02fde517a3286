// Command-line driver: reduce | batch | features | adversarial | compare.
// Exit codes: 0 success, 2 configuration error, 3 runtime/partial failure.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "predred/predred.hpp"

namespace fs = std::filesystem;
using namespace predred;

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

struct ReduceArgs {
  std::string grammar, model, oracle_cmd, algo, file, out, trace_out;
  int max_queries = 50000;
  std::int64_t timeout_ms = 10000;
  std::int64_t stall_ms = 30000;
  bool no_replacement = false;
  bool deterministic = false;
};

int run_reduce(const ReduceArgs& a) {
  if (!fs::exists(a.file)) {
    std::fprintf(stderr, "error: input file not found: %s\n", a.file.c_str());
    return kConfigError;
  }
  Grammar grammar{};
  std::unique_ptr<Oracle> oracle;
  try {
    grammar = Grammar::load(read_file(a.grammar));
    if (!a.model.empty())
      oracle = std::make_unique<SignatureOracle>(SignatureModel::load_file(a.model));
    else
      oracle = std::make_unique<ExternalOracle>(
          a.oracle_cmd, std::chrono::milliseconds(a.timeout_ms));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  }

  try {
    const Parser parser(grammar);
    const std::string text = read_file(a.file);
    const Prediction base = oracle->predict_label(text);
    if (base.failure) {
      std::fprintf(stderr, "error: oracle failed on the baseline program%s\n",
                   base.timed_out ? " (timeout)" : "");
      return kRuntimeError;
    }

    ReductionProblem problem;
    problem.program = text;
    problem.oracle = oracle.get();
    problem.baseline = base.label;
    problem.budgets =
        Budgets::from_env({a.max_queries, std::chrono::milliseconds(a.timeout_ms)});

    ReductionOutcome out;
    if (a.algo == "perses") {
      PersesOptions opts;
      opts.no_replacement = a.no_replacement;
      out = perses_reduce(problem, parser, opts);
    } else {
      DdConfig dd;
      dd.granularity = a.algo == "dd-token" ? DdConfig::Granularity::Token
                                            : DdConfig::Granularity::Char;
      dd.budgets = problem.budgets;
      dd.stall_timeout = std::chrono::milliseconds(a.stall_ms);
      dd.deterministic = a.deterministic;
      out = dd_reduce(problem, dd, parser);
    }
    out.trace.program_id = fs::path(a.file).stem().string();
    out.trace.label = base.label;
    out.trace.model_id = oracle->model_id();

    std::printf("%s\n", out.reduced_text.c_str());
    std::fprintf(stderr, "tokens %lld -> %lld (ratio %.4f), queries %lld, steps %lld%s\n",
                 static_cast<long long>(out.trace.tokens_before),
                 static_cast<long long>(out.trace.tokens_after),
                 out.trace.reduction_ratio,
                 static_cast<long long>(out.trace.queries),
                 static_cast<long long>(out.trace.accepted_steps),
                 out.trace.truncated ? " [truncated]" : "");
    if (!a.out.empty()) write_file(a.out, out.reduced_text + "\n");
    if (!a.trace_out.empty())
      write_file(a.trace_out, trace_to_json(out.trace).dump(2) + "\n");
    return kOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kRuntimeError;
  }
}

int run_batch(const std::string& config_path, std::optional<int> jobs,
              std::optional<std::string> reducer,
              std::optional<std::string> output_dir) {
  JobConfig cfg;
  try {
    cfg = JobConfig::from_toml_file(config_path);
    if (jobs) cfg.jobs = *jobs;
    if (reducer) cfg.reducer = *reducer;
    if (output_dir) cfg.output_dir = *output_dir;
    cfg.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  }
  try {
    const JobSummary summary = run_pipeline(cfg);
    std::printf("reduced %zu programs (%zu skipped, %d failed) -> %s\n",
                summary.traces.size(), summary.skipped.size(),
                summary.failures, cfg.output_dir.c_str());
    return summary.failures == 0 ? kOk : kRuntimeError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kRuntimeError;
  }
}

int run_features(const std::string& traces_dir, double threshold) {
  if (!fs::exists(fs::path(traces_dir) / "job.json")) {
    std::fprintf(stderr, "error: %s does not contain job.json\n",
                 traces_dir.c_str());
    return kConfigError;
  }
  try {
    const auto reports = compute_feature_reports(traces_dir, threshold);
    write_feature_reports(traces_dir, reports);
    std::fputs(features_csv(reports).c_str(), stdout);
    return kOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kRuntimeError;
  }
}

int run_adversarial(const std::string& traces_dir,
                    const std::optional<std::string>& set_filter) {
  if (!fs::exists(fs::path(traces_dir) / "job.json")) {
    std::fprintf(stderr, "error: %s does not contain job.json\n",
                 traces_dir.c_str());
    return kConfigError;
  }
  try {
    const auto rows = compute_adversarial(traces_dir, set_filter);
    const std::string csv = adversarial_csv(rows);
    if (!set_filter)
      write_file((fs::path(traces_dir) / "adversarial.csv").string(), csv);
    std::fputs(csv.c_str(), stdout);
    return kOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kRuntimeError;
  }
}

int run_compare(const std::string& dir_a, const std::string& dir_b,
                const std::string& out_dir) {
  for (const std::string& d : {dir_a, dir_b}) {
    if (!fs::exists(fs::path(d) / "traces.jsonl")) {
      std::fprintf(stderr, "error: %s does not contain traces.jsonl\n", d.c_str());
      return kConfigError;
    }
  }
  try {
    const JobMeta meta_a = load_job_meta(dir_a);
    const JobMeta meta_b = load_job_meta(dir_b);
    const auto traces_a =
        read_traces_jsonl((fs::path(dir_a) / "traces.jsonl").string());
    const auto traces_b =
        read_traces_jsonl((fs::path(dir_b) / "traces.jsonl").string());
    std::map<std::string, std::string> tag_of;
    for (const CorpusEntry& e : load_corpus(meta_a.corpus_dir))
      tag_of[e.program_id] = e.input_type;
    const auto rows = compare_report(traces_a, traces_b, tag_of);
    const std::string csv = compare_csv(meta_a.reducer, meta_b.reducer, rows);
    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / "compare.csv").string(), csv);
    write_file((fs::path(out_dir) / "compare.json").string(),
               compare_json(meta_a.reducer, meta_b.reducer, rows).dump(2) + "\n");
    std::fputs(csv.c_str(), stdout);
    return kOk;
  } catch (const MismatchedCorpus& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kRuntimeError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grammar-driven prediction-preserving program reduction"};
  app.require_subcommand(1);

  ReduceArgs ra;
  CLI::App* reduce = app.add_subcommand("reduce", "reduce a single program");
  reduce->add_option("--grammar", ra.grammar, "grammar file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* model_opt = reduce->add_option("--model", ra.model, "signature model file");
  auto* cmd_opt =
      reduce->add_option("--oracle-cmd", ra.oracle_cmd, "external oracle command");
  model_opt->excludes(cmd_opt);
  reduce->add_option("--algo", ra.algo, "reduction algorithm")
      ->required()
      ->check(CLI::IsMember({"perses", "dd-token", "dd-char"}));
  reduce->add_option("--max-queries", ra.max_queries, "oracle query budget");
  reduce->add_option("--timeout-ms", ra.timeout_ms, "per-query timeout");
  reduce->add_option("--stall-ms", ra.stall_ms, "ddmin stall timeout");
  reduce->add_flag("--no-replacement", ra.no_replacement,
                   "disable subtree replacement");
  reduce->add_flag("--deterministic", ra.deterministic,
                   "suppress wall-clock effects");
  reduce->add_option("-o,--out", ra.out, "write reduced program here");
  reduce->add_option("--trace", ra.trace_out, "write the trace record here");
  reduce->add_option("file", ra.file, "program to reduce")->required();

  std::string batch_config;
  std::optional<int> batch_jobs;
  std::optional<std::string> batch_reducer, batch_out;
  CLI::App* batch = app.add_subcommand("batch", "reduce a corpus from a job config");
  batch->add_option("--config", batch_config, "job config (TOML)")
      ->required()
      ->check(CLI::ExistingFile);
  batch->add_option("-j,--jobs", batch_jobs, "worker count override");
  batch->add_option("--reducer", batch_reducer, "reducer override")
      ->check(CLI::IsMember({"perses", "dd-token", "dd-char"}));
  batch->add_option("--output-dir", batch_out, "output directory override");

  std::string feat_dir;
  double feat_threshold = 0.5;
  CLI::App* features = app.add_subcommand("features", "aggregate key features");
  features->add_option("--traces", feat_dir, "batch output directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  features->add_option("--threshold", feat_threshold, "key-feature threshold")
      ->check(CLI::Range(1e-9, 1.0));

  std::string adv_dir;
  std::optional<std::string> adv_set;
  CLI::App* adversarial =
      app.add_subcommand("adversarial", "variable-rename misprediction rates");
  adversarial->add_option("--traces", adv_dir, "batch output directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  adversarial->add_option("--set", adv_set, "restrict to one candidate set")
      ->check(CLI::IsMember({"original", "key", "reduced"}));

  std::string cmp_a, cmp_b, cmp_out = ".";
  CLI::App* compare = app.add_subcommand("compare", "compare two trace sets");
  compare->add_option("a", cmp_a, "first batch output directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  compare->add_option("b", cmp_b, "second batch output directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  compare->add_option("--out", cmp_out, "directory for compare.csv/json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  if (reduce->parsed()) {
    if (ra.model.empty() == ra.oracle_cmd.empty()) {
      std::fprintf(stderr, "error: exactly one of --model / --oracle-cmd is required\n");
      return kConfigError;
    }
    return run_reduce(ra);
  }
  if (batch->parsed())
    return run_batch(batch_config, batch_jobs, batch_reducer, batch_out);
  if (features->parsed()) return run_features(feat_dir, feat_threshold);
  if (adversarial->parsed()) return run_adversarial(adv_dir, adv_set);
  if (compare->parsed()) return run_compare(cmp_a, cmp_b, cmp_out);
  return kConfigError;
}
