#pragma once

// Independent brute-force reference implementations the reducers are checked
// against. Everything here works on spliced token strings and re-parses each
// candidate, deliberately avoiding the library's render-with-swap machinery.

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "predred/predred.hpp"

namespace testsupport {

namespace brutedetail {

inline void node_spans(const predred::Node& n, std::size_t start,
                       std::map<const predred::Node*,
                                std::pair<std::size_t, std::size_t>>& out) {
  std::size_t cur = start;
  for (const auto& c : n.children) {
    node_spans(*c, cur, out);
    cur += c->token_count;
  }
  out[&n] = {start, start + n.token_count};
}

inline void all_nodes(const predred::Node& n,
                      std::vector<const predred::Node*>& out) {
  out.push_back(&n);
  for (const auto& c : n.children) all_nodes(*c, out);
}

}  // namespace brutedetail

/// Every text reachable from `tree` by exactly one mutation of the reduction
/// rule set: deleting one child of a quantified node (plus keeps >= 1) or
/// replacing a rule node with a strictly smaller same-name descendant.
/// Candidates are built by splicing the leaf token sequence.
inline std::vector<std::string> one_step_texts(const predred::Node& tree) {
  using predred::Node;
  std::map<const Node*, std::pair<std::size_t, std::size_t>> span;
  brutedetail::node_spans(tree, 0, span);
  std::vector<const Node*> nodes;
  brutedetail::all_nodes(tree, nodes);

  std::vector<std::string> lex;
  for (const predred::Token& t : predred::leaves(tree)) lex.push_back(t.text);

  auto splice = [&](std::size_t a, std::size_t b, std::size_t c,
                    std::size_t d) {
    std::string out;
    auto append = [&](std::size_t i) {
      if (!out.empty()) out.push_back(' ');
      out += lex[i];
    };
    for (std::size_t i = 0; i < a; ++i) append(i);
    for (std::size_t i = c; i < d; ++i) append(i);
    for (std::size_t i = b; i < lex.size(); ++i) append(i);
    return out;
  };

  std::vector<std::string> out;
  for (const Node* n : nodes) {
    if (n->kind == Node::Kind::Quant) {
      if (n->quant == predred::QuantKind::Plus && n->children.size() < 2)
        continue;
      for (const auto& child : n->children) {
        const auto [a, b] = span.at(child.get());
        out.push_back(splice(a, b, 0, 0));
      }
    } else if (n->kind == Node::Kind::Rule) {
      const auto [a, b] = span.at(n);
      std::vector<const Node*> sub;
      brutedetail::all_nodes(*n, sub);
      for (const Node* d : sub) {
        if (d == n || d->kind != Node::Kind::Rule || d->name != n->name ||
            d->token_count >= n->token_count)
          continue;
        const auto [c, e] = span.at(d);
        out.push_back(splice(a, b, c, e));
      }
    }
  }
  return out;
}

struct BruteClosure {
  std::set<std::string> visited;       // every reachable state (canonical text)
  std::size_t min_pass_tokens{0};
  std::string min_pass_text;
};

/// Exhaustive closure of the mutation rule set, seeded with `text`. Each
/// state is re-parsed before expansion, so the closure covers exactly the
/// grammar-valid derivatives; `pass` marks which of them preserve the
/// prediction.
inline BruteClosure brute_closure(
    const predred::Parser& parser, const std::string& text,
    const std::function<bool(const std::string&)>& pass,
    std::size_t max_states = 200000) {
  const predred::ParseResult seed = predred::parse_text(parser, text);
  if (!seed.ok()) throw std::runtime_error("brute_closure: seed does not parse");
  if (!pass(text)) throw std::runtime_error("brute_closure: seed does not pass");

  BruteClosure out;
  out.min_pass_tokens = seed.tree->token_count;
  out.min_pass_text = predred::render(*seed.tree);

  std::deque<std::string> queue;
  auto push = [&](const std::string& t) {
    if (out.visited.insert(t).second) queue.push_back(t);
  };
  push(predred::render(*seed.tree));

  while (!queue.empty()) {
    if (out.visited.size() > max_states)
      throw std::runtime_error("brute_closure: state budget exceeded");
    const std::string cur = std::move(queue.front());
    queue.pop_front();
    const predred::ParseResult pr = predred::parse_text(parser, cur);
    if (!pr.ok())
      throw std::runtime_error("brute_closure: mutated state does not parse: " + cur);
    if (pass(cur) && pr.tree->token_count < out.min_pass_tokens) {
      out.min_pass_tokens = pr.tree->token_count;
      out.min_pass_text = cur;
    }
    for (std::string& next : one_step_texts(*pr.tree)) push(std::move(next));
  }
  return out;
}

/// All 1-minimal passing subsequences of `items`, by full enumeration.
/// Follows the ddmin convention: the empty list is never considered, so a
/// passing singleton counts as 1-minimal.
template <typename T, typename Pred>
std::vector<std::vector<T>> one_minimal_subsequences(
    const std::vector<T>& items, Pred&& pass) {
  const std::size_t n = items.size();
  if (n == 0 || n > 20)
    throw std::runtime_error("one_minimal_subsequences: bad item count");

  const std::size_t total = std::size_t{1} << n;
  std::vector<char> ok(total, 0);
  std::vector<T> sub;
  for (std::size_t mask = 1; mask < total; ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(items[i]);
    ok[mask] = pass(sub) ? 1 : 0;
  }

  std::vector<std::vector<T>> out;
  for (std::size_t mask = 1; mask < total; ++mask) {
    if (!ok[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if ((mask & bit) && (mask ^ bit) != 0 && ok[mask ^ bit]) minimal = false;
    }
    if (!minimal) continue;
    sub.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(items[i]);
    out.push_back(sub);
  }
  return out;
}

template <typename T>
bool is_subsequence(const std::vector<T>& small, const std::vector<T>& big) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < big.size() && j < small.size(); ++i)
    if (big[i] == small[j]) ++j;
  return j == small.size();
}

/// Direct membership test in the set enumerated above, usable when 2^n is out
/// of reach: `out` is a 1-minimal passing subsequence of `in` iff it is a
/// subsequence, passes, and every single-element deletion fails (singletons
/// are 1-minimal by the ddmin convention).
template <typename T, typename Pred>
bool is_one_minimal_subsequence(const std::vector<T>& in,
                                const std::vector<T>& out, Pred&& pass) {
  if (out.empty() || !is_subsequence(out, in)) return false;
  if (!pass(out)) return false;
  if (out.size() == 1) return true;
  std::vector<T> probe;
  for (std::size_t skip = 0; skip < out.size(); ++skip) {
    probe.clear();
    for (std::size_t i = 0; i < out.size(); ++i)
      if (i != skip) probe.push_back(out[i]);
    if (pass(probe)) return false;
  }
  return true;
}

}  // namespace testsupport
