#pragma once

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "predred/lexer.hpp"
#include "predred/parser.hpp"
#include "predred/util.hpp"

namespace predred {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic stand-in model: a label matches a candidate iff its whole
/// required token set occurs among the candidate's token texts. The match
/// with the largest required set wins; ties go to the lexicographically
/// smallest label; no match falls back to fallback_label.
struct SignatureModel {
  std::string model_id{"sig"};
  std::string fallback_label{"unknown"};
  std::vector<std::pair<std::string, std::set<std::string>>> signatures;

  static SignatureModel parse(std::string_view text, std::string model_id) {
    SignatureModel m;
    m.model_id = std::move(model_id);
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      std::string_view raw = text.substr(
          pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;
      const std::size_t hash = raw.find('#');
      if (hash != std::string_view::npos) raw = raw.substr(0, hash);
      const std::string line = trim(raw);
      if (line.empty()) continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw ModelError("model line " + std::to_string(line_no) +
                         ": expected 'label = tok1,tok2,...'");
      const std::string label = trim(std::string_view(line).substr(0, eq));
      if (label.empty())
        throw ModelError("model line " + std::to_string(line_no) + ": empty label");
      std::set<std::string> required;
      std::string_view rest = std::string_view(line).substr(eq + 1);
      while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string tok = trim(rest.substr(0, comma));
        if (!tok.empty()) required.insert(tok);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      if (required.empty())
        throw ModelError("model line " + std::to_string(line_no) +
                         ": label '" + label + "' has an empty required set");
      for (const auto& [existing, _] : m.signatures)
        if (existing == label)
          throw ModelError("duplicate label '" + label + "'");
      m.signatures.emplace_back(label, std::move(required));
    }
    for (const auto& [label, _] : m.signatures)
      if (label == m.fallback_label)
        throw ModelError("label collides with fallback label '" +
                         m.fallback_label + "'");
    return m;
  }

  static SignatureModel load_file(const std::string& path) {
    return parse(read_file(path),
                 std::filesystem::path(path).stem().string());
  }
};

/// Total function: unlexable candidates contribute their lexed prefix.
inline std::string predict(const SignatureModel& model,
                           std::string_view candidate) {
  const LexResult lexed = tokenize(candidate);
  std::unordered_set<std::string_view> present;
  present.reserve(lexed.tokens.size());
  for (const Token& t : lexed.tokens) present.insert(t.text);

  const std::string* best = nullptr;
  std::size_t best_size = 0;
  for (const auto& [label, required] : model.signatures) {
    bool all = true;
    for (const std::string& tok : required)
      if (!present.count(tok)) { all = false; break; }
    if (!all) continue;
    if (!best || required.size() > best_size ||
        (required.size() == best_size && label < *best)) {
      best = &label;
      best_size = required.size();
    }
  }
  return best ? *best : model.fallback_label;
}

struct Prediction {
  std::string label;
  bool failure{false};
  bool timed_out{false};
};

class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual const std::string& model_id() const = 0;
  virtual Prediction predict_label(const std::string& candidate) = 0;
};

class SignatureOracle final : public Oracle {
 public:
  explicit SignatureOracle(SignatureModel model) : model_(std::move(model)) {}

  const std::string& model_id() const override { return model_.model_id; }
  const SignatureModel& model() const { return model_; }

  Prediction predict_label(const std::string& candidate) override {
    return {predict(model_, candidate), false, false};
  }

 private:
  SignatureModel model_;
};

/// Pseudo-labels for the exit-code protocol, so the baseline invariant works
/// the same way for both oracle kinds.
inline constexpr std::string_view kExternalPreserved = "preserved";
inline constexpr std::string_view kExternalChanged = "changed";

/// Runs `<command> <candidate-file>`; exit 0 means the prediction is
/// preserved. Spawn errors and timeouts are oracle failures (treated as Fail
/// by the session and flagged in the trace).
class ExternalOracle final : public Oracle {
 public:
  explicit ExternalOracle(std::string command,
                          std::chrono::milliseconds timeout)
      : command_(std::move(command)), timeout_(timeout) {}

  const std::string& model_id() const override { return id_; }

  Prediction predict_label(const std::string& candidate) override {
    namespace fs = std::filesystem;
    static std::atomic<unsigned> counter{0};
    const fs::path path =
        fs::temp_directory_path() /
        ("predred_" + std::to_string(::getpid()) + "_" +
         std::to_string(counter.fetch_add(1)) + ".java");
    try {
      write_file(path.string(), candidate);
    } catch (const std::exception&) {
      return {std::string(kExternalChanged), true, false};
    }

    const std::string cmdline = command_ + " '" + path.string() + "'";
    const pid_t pid = ::fork();
    if (pid < 0) {
      std::error_code ec;
      fs::remove(path, ec);
      return {std::string(kExternalChanged), true, false};
    }
    if (pid == 0) {
      ::execl("/bin/sh", "sh", "-c", cmdline.c_str(), (char*)nullptr);
      ::_exit(127);
    }

    const auto start = std::chrono::steady_clock::now();
    int status = 0;
    bool timed_out = false;
    for (;;) {
      const pid_t r = ::waitpid(pid, &status, WNOHANG);
      if (r == pid) break;
      if (r < 0) {
        status = -1;
        break;
      }
      if (std::chrono::steady_clock::now() - start > timeout_) {
        ::kill(pid, SIGKILL);
        ::waitpid(pid, &status, 0);
        timed_out = true;
        break;
      }
      std::this_thread::sleep_for(std::chrono::microseconds(200));
    }
    std::error_code ec;
    fs::remove(path, ec);

    if (timed_out) return {std::string(kExternalChanged), true, true};
    if (WIFEXITED(status) && WEXITSTATUS(status) == 0)
      return {std::string(kExternalPreserved), false, false};
    if (!WIFEXITED(status))
      return {std::string(kExternalChanged), true, false};
    return {std::string(kExternalChanged), false, false};
  }

 private:
  std::string command_;
  std::string id_{"external"};
  std::chrono::milliseconds timeout_;
};

struct Budgets {
  int max_queries{50000};
  std::chrono::milliseconds per_query_timeout{10000};

  /// PREDRED_ORACLE_TIMEOUT_MS overrides the per-query timeout.
  static Budgets from_env(Budgets base) {
    if (const char* ms = std::getenv("PREDRED_ORACLE_TIMEOUT_MS")) {
      const long v = std::strtol(ms, nullptr, 10);
      if (v > 0) base.per_query_timeout = std::chrono::milliseconds(v);
    }
    return base;
  }
  static Budgets from_env() { return from_env(Budgets{}); }
};

/// The unit of work: program, oracle, recorded baseline, budgets.
struct ReductionProblem {
  std::string program;
  Oracle* oracle{nullptr};
  std::string baseline;
  Budgets budgets;
};

struct Verdict {
  enum class Outcome { Pass, Fail };
  Outcome outcome{Outcome::Fail};
  std::string predicted;
  bool valid_parse{false};
  bool from_cache{false};
  bool oracle_failure{false};
  bool timed_out{false};
  bool budget_hit{false};  // refused: query budget exhausted, nothing was run

  bool pass() const { return outcome == Outcome::Pass; }
};

struct StepEntry {
  std::uint64_t candidate_hash;
  bool pass;
  bool valid_parse;
};

/// Per-reduction query gateway: caches candidate verdicts (queries count
/// cache misses only), records validity of every candidate, keeps the step
/// log, and refuses new queries once max_queries is spent.
class OracleSession {
 public:
  OracleSession(Oracle& oracle, const Parser& parser, std::string baseline,
                Budgets budgets)
      : oracle_(&oracle),
        parser_(&parser),
        baseline_(std::move(baseline)),
        budgets_(budgets) {}

  Verdict preserved(const std::string& candidate) {
    auto it = cache_.find(candidate);
    if (it != cache_.end()) {
      Verdict v = it->second;
      v.from_cache = true;
      record(candidate, v);
      return v;
    }
    if (queries_ >= budgets_.max_queries) {
      truncated_ = true;
      Verdict v;
      v.budget_hit = true;
      return v;
    }
    ++queries_;
    const Prediction pred = oracle_->predict_label(candidate);
    Verdict v;
    v.predicted = pred.label;
    v.oracle_failure = pred.failure;
    v.timed_out = pred.timed_out;
    v.valid_parse = !recognize_text(*parser_, candidate).has_value();
    v.outcome = (!pred.failure && pred.label == baseline_)
                    ? Verdict::Outcome::Pass
                    : Verdict::Outcome::Fail;
    cache_.emplace(candidate, v);
    record(candidate, v);
    return v;
  }

  const std::string& baseline() const { return baseline_; }
  int queries() const { return queries_; }
  int candidates_total() const { return candidates_total_; }
  int candidates_valid() const { return candidates_valid_; }
  bool truncated() const { return truncated_; }
  const std::vector<StepEntry>& step_log() const { return step_log_; }

  int accepted_steps{0};  // bumped by reducers when a candidate is adopted

 private:
  void record(const std::string& candidate, const Verdict& v) {
    ++candidates_total_;
    if (v.valid_parse) ++candidates_valid_;
    step_log_.push_back({fnv1a64(candidate), v.pass(), v.valid_parse});
  }

  Oracle* oracle_;
  const Parser* parser_;
  std::string baseline_;
  Budgets budgets_;
  std::unordered_map<std::string, Verdict> cache_;
  std::vector<StepEntry> step_log_;
  int queries_{0};
  int candidates_total_{0};
  int candidates_valid_{0};
  bool truncated_{false};
};

}  // namespace predred
