#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "predred/lexer.hpp"
#include "predred/oracle.hpp"
#include "predred/parser.hpp"
#include "predred/trace.hpp"

namespace predred {

/// Classic ddmin. Partition the current list into n chunks (even spread),
/// test each chunk then each complement left to right; a passing chunk
/// restarts at n=2, a passing complement continues at n-1, otherwise n
/// doubles until it exceeds the list size. The result passes the predicate
/// and is 1-minimal. `should_stop` aborts with the best-so-far (budget
/// truncation); `test(items)` is assumed true on entry and is never re-run.
template <typename T, typename Test, typename Stop>
std::vector<T> ddmin(std::vector<T> items, Test&& test, Stop&& should_stop) {
  std::vector<T> cur = std::move(items);
  std::size_t n = 2;
  while (cur.size() >= 2) {
    if (n > cur.size()) n = cur.size();
    const std::size_t len = cur.size();
    auto chunk_begin = [&](std::size_t i) { return i * len / n; };

    bool reduced = false;
    for (std::size_t i = 0; i < n && !reduced; ++i) {
      if (should_stop()) return cur;
      std::vector<T> chunk(cur.begin() + chunk_begin(i),
                           cur.begin() + chunk_begin(i + 1));
      if (test(chunk)) {
        cur = std::move(chunk);
        n = 2;
        reduced = true;
      }
    }
    if (reduced) continue;

    for (std::size_t i = 0; i < n && !reduced; ++i) {
      if (should_stop()) return cur;
      std::vector<T> complement;
      complement.reserve(len);
      complement.insert(complement.end(), cur.begin(),
                        cur.begin() + chunk_begin(i));
      complement.insert(complement.end(), cur.begin() + chunk_begin(i + 1),
                        cur.end());
      if (test(complement)) {
        cur = std::move(complement);
        n = std::max<std::size_t>(n - 1, 2);
        reduced = true;
      }
    }
    if (reduced) continue;

    if (n >= cur.size()) break;
    n = std::min(n * 2, cur.size());
  }
  return cur;
}

struct DdConfig {
  enum class Granularity { Token, Char };
  Granularity granularity{Granularity::Token};
  Budgets budgets{};
  std::chrono::milliseconds stall_timeout{30000};
  bool deterministic{false};  // disables the stall timer (budgets only)
};

inline const char* reducer_id(DdConfig::Granularity g) {
  return g == DdConfig::Granularity::Token ? "dd-token" : "dd-char";
}

/// Syntax-unaware reduction over lexer tokens (joined by single spaces) or
/// over the bytes of the rendered program. Validity of every candidate is
/// recorded in the trace; the reduced text frequently does not parse.
inline ReductionOutcome dd_reduce(const ReductionProblem& problem,
                                  DdConfig config, const Parser& parser) {
  const LexResult lexed = tokenize(problem.program);
  if (config.granularity == DdConfig::Granularity::Token && !lexed.ok())
    throw std::runtime_error("dd-token: input does not lex at offset " +
                             std::to_string(*lexed.error_offset));

  // Char mode runs on the rendered (canonically spaced) program when the
  // input parses, so char counts are layout-independent.
  std::string base_text;
  if (config.granularity == DdConfig::Granularity::Char) {
    if (lexed.ok()) {
      const ParseResult pr = parser.parse(lexed.tokens);
      base_text = pr.ok() ? render(*pr.tree) : problem.program;
    } else {
      base_text = problem.program;
    }
  } else {
    base_text = join_tokens(lexed.tokens);
  }

  OracleSession session(*problem.oracle, parser, problem.baseline,
                        Budgets::from_env(config.budgets));
  if (!session.preserved(base_text).pass())
    throw std::runtime_error("baseline prediction not preserved on the input");

  const auto stall = config.stall_timeout;
  const bool use_stall = !config.deterministic;
  auto test_text = [&](const std::string& text) {
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = session.preserved(text);
    if (v.budget_hit) return false;
    if (use_stall && std::chrono::steady_clock::now() - t0 > stall)
      return false;  // stall workaround: give up on this step, move on
    if (v.pass()) {
      ++session.accepted_steps;
      return true;
    }
    return false;
  };
  auto should_stop = [&] { return session.truncated(); };

  std::string reduced_text;
  if (config.granularity == DdConfig::Granularity::Token) {
    std::vector<Token> kept = ddmin(
        lexed.tokens,
        [&](const std::vector<Token>& sub) { return test_text(join_tokens(sub)); },
        should_stop);
    reduced_text = join_tokens(kept);
  } else {
    std::vector<char> items(base_text.begin(), base_text.end());
    std::vector<char> kept = ddmin(
        items,
        [&](const std::vector<char>& sub) {
          return test_text(std::string(sub.begin(), sub.end()));
        },
        should_stop);
    reduced_text.assign(kept.begin(), kept.end());
  }

  ReductionOutcome out;
  out.reduced_text = reduced_text;
  ParseResult pr = parse_text(parser, reduced_text);
  if (pr.ok()) out.reduced_tree = std::move(pr.tree);

  TraceRecord& t = out.trace;
  t.reducer_id = reducer_id(config.granularity);
  const LexResult before = tokenize(base_text);
  t.tokens_before = static_cast<int>(before.tokens.size());
  const LexResult after = tokenize(reduced_text);
  t.tokens_after = static_cast<int>(after.tokens.size());
  t.reduction_ratio =
      t.tokens_before == 0
          ? 0.0
          : 1.0 - static_cast<double>(t.tokens_after) / t.tokens_before;
  fill_trace_counters(t, session);
  return out;
}

}  // namespace predred
