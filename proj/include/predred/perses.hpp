#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "predred/ddmin.hpp"
#include "predred/grammar.hpp"
#include "predred/oracle.hpp"
#include "predred/parse_tree.hpp"
#include "predred/parser.hpp"
#include "predred/trace.hpp"

namespace predred {

namespace detail {

inline void collect_swapped(const Node& n, const Node* target,
                            const std::vector<const Node*>* kept,
                            const Node* replacement, TokenSeq& out) {
  if (&n == target) {
    if (kept) {
      for (const Node* c : *kept)
        collect_swapped(*c, nullptr, nullptr, nullptr, out);
    } else if (replacement) {
      collect_swapped(*replacement, nullptr, nullptr, nullptr, out);
    }
    return;
  }
  if (n.kind == Node::Kind::Terminal) {
    out.push_back(n.token);
    return;
  }
  for (const auto& c : n.children)
    collect_swapped(*c, target, kept, replacement, out);
}

}  // namespace detail

/// Renders the tree as if `target`'s child list were `kept` (order given by
/// the caller; no structural mutation happens).
inline std::string render_with_children(const Node& root, const Node* target,
                                        const std::vector<const Node*>& kept) {
  TokenSeq toks;
  detail::collect_swapped(root, target, &kept, nullptr, toks);
  return join_tokens(toks);
}

/// Renders the tree as if `target` were replaced by `replacement` (which
/// must live inside `target`'s subtree).
inline std::string render_with_replacement(const Node& root, const Node* target,
                                           const Node* replacement) {
  TokenSeq toks;
  detail::collect_swapped(root, target, nullptr, replacement, toks);
  return join_tokens(toks);
}

/// Same-nonterminal descendants with strictly smaller token_count, smallest
/// first (ties in BFS discovery order).
inline std::vector<const Node*> replacement_candidates(const Node& node) {
  if (node.kind != Node::Kind::Rule) return {};
  std::vector<const Node*> found;
  std::deque<const Node*> queue;
  for (const auto& c : node.children) queue.push_back(c.get());
  while (!queue.empty()) {
    const Node* cur = queue.front();
    queue.pop_front();
    if (cur->kind == Node::Kind::Rule && cur->name == node.name &&
        cur->token_count < node.token_count)
      found.push_back(cur);
    for (const auto& c : cur->children) queue.push_back(c.get());
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Node* a, const Node* b) {
                     return a->token_count < b->token_count;
                   });
  return found;
}

namespace detail {

inline void commit_children(Node& node, const std::vector<const Node*>& kept) {
  std::vector<NodePtr> next;
  next.reserve(kept.size());
  for (auto& up : node.children) {
    if (std::find(kept.begin(), kept.end(), up.get()) != kept.end())
      next.push_back(std::move(up));
  }
  node.children = std::move(next);
}

inline void commit_replacement(NodePtr& root, const Node* target,
                               const Node* replacement) {
  NodePtr taken;
  for (auto& up : replacement->parent->children) {
    if (up.get() == replacement) {
      taken = std::move(up);
      break;
    }
  }
  if (root.get() == target) {
    root = std::move(taken);
    return;
  }
  for (auto& up : target->parent->children) {
    if (up.get() == target) {
      up = std::move(taken);  // destroys the old subtree (minus `taken`)
      return;
    }
  }
}

inline Node* pick_next(Node& root, const std::set<const Node*>& processed,
                       bool allow_replacement) {
  Node* best = nullptr;
  std::size_t best_count = 0;
  auto visit = [&](auto&& self, Node& n) -> void {
    bool eligible = false;
    if (n.kind == Node::Kind::Quant)
      eligible = !n.children.empty();
    else if (n.kind == Node::Kind::Rule)
      eligible = allow_replacement;
    if (eligible && !processed.count(&n) &&
        (!best || n.token_count > best_count)) {
      best = &n;  // pre-order scan: first hit wins ties (leftmost, outermost)
      best_count = n.token_count;
    }
    for (auto& c : n.children) self(self, *c);
  };
  visit(visit, root);
  return best;
}

}  // namespace detail

struct PersesOptions {
  bool no_replacement{false};
  int max_passes{10};
};

namespace detail {

inline bool perses_try_node(Node* node, NodePtr& root, OracleSession& session,
                            const PersesOptions& opts) {
  if (node->kind == Node::Kind::Quant) {
    if (node->children.empty()) return false;
    const bool star = node->quant == QuantKind::Star;
    const bool plus = node->quant == QuantKind::Plus;

    if (!plus) {  // star and optional may drop everything at once
      const std::string text = render_with_children(*root, node, {});
      if (session.preserved(text).pass()) {
        ++session.accepted_steps;
        node->children.clear();
        refresh(*root);
        return true;
      }
    }
    if ((star || plus) && node->children.size() >= 2) {
      std::vector<const Node*> items;
      items.reserve(node->children.size());
      for (const auto& c : node->children) items.push_back(c.get());
      const std::size_t before = items.size();
      std::vector<const Node*> kept = ddmin(
          std::move(items),
          [&](const std::vector<const Node*>& sub) {
            const Verdict v =
                session.preserved(render_with_children(*root, node, sub));
            if (v.pass() && !v.budget_hit) {
              ++session.accepted_steps;
              return true;
            }
            return false;
          },
          [&] { return session.truncated(); });
      if (kept.size() < before) {
        commit_children(*node, kept);
        refresh(*root);
        return true;
      }
    }
    return false;
  }

  if (node->kind == Node::Kind::Rule && !opts.no_replacement) {
    for (const Node* cand : replacement_candidates(*node)) {
      if (session.truncated()) return false;
      const Verdict v =
          session.preserved(render_with_replacement(*root, node, cand));
      if (v.pass() && !v.budget_hit) {
        ++session.accepted_steps;
        commit_replacement(root, node, cand);
        refresh(*root);
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// Syntax-guided reduction. Nodes are processed largest-token-count first
/// (ties leftmost); star/plus children shrink via list-ddmin (star also tries
/// dropping the whole list), optional children are deleted outright, and rule
/// nodes may be replaced by a same-nonterminal descendant (smallest first).
/// Passes repeat until one changes nothing, capped at max_passes. Every
/// candidate is a rendered tree, so every candidate parses.
inline ReductionOutcome perses_reduce(const ReductionProblem& problem,
                                      const Parser& parser,
                                      PersesOptions opts = {}) {
  const LexResult lexed = tokenize(problem.program);
  if (!lexed.ok())
    throw std::runtime_error("perses: input does not lex at offset " +
                             std::to_string(*lexed.error_offset));
  ParseResult pr = parser.parse(lexed.tokens);
  if (!pr.ok())
    throw std::runtime_error("perses: input does not parse at offset " +
                             std::to_string(*pr.error_offset));
  NodePtr root = std::move(pr.tree);

  OracleSession session(*problem.oracle, parser, problem.baseline,
                        Budgets::from_env(problem.budgets));
  if (!session.preserved(render(*root)).pass())
    throw std::runtime_error("baseline prediction not preserved on the input");

  bool changed = true;
  int passes = 0;
  while (changed && passes < opts.max_passes && !session.truncated()) {
    changed = false;
    ++passes;
    std::set<const Node*> processed;
    for (;;) {
      if (session.truncated()) break;
      Node* node = detail::pick_next(*root, processed, !opts.no_replacement);
      if (!node) break;
      processed.insert(node);
      if (detail::perses_try_node(node, root, session, opts)) changed = true;
    }
  }

  ReductionOutcome out;
  out.reduced_text = render(*root);
  TraceRecord& t = out.trace;
  t.reducer_id = "perses";
  t.tokens_before = static_cast<int>(lexed.tokens.size());
  t.tokens_after = static_cast<int>(root->token_count);
  t.reduction_ratio =
      t.tokens_before == 0
          ? 0.0
          : 1.0 - static_cast<double>(t.tokens_after) / t.tokens_before;
  fill_trace_counters(t, session);
  out.reduced_tree = std::move(root);
  return out;
}

/// Post-hoc verifier: true iff every single applicable mutation from
/// perses_reduce's rule set (one quantified-child deletion or one compatible
/// replacement) breaks the prediction. Queries the oracle directly (memoized)
/// and never mutates the tree.
inline bool check_one_tree_minimal(const ReductionProblem& problem,
                                   const Node& tree) {
  std::unordered_map<std::string, bool> memo;
  auto passes = [&](const std::string& text) {
    auto it = memo.find(text);
    if (it != memo.end()) return it->second;
    const Prediction p = problem.oracle->predict_label(text);
    const bool ok = !p.failure && p.label == problem.baseline;
    memo.emplace(text, ok);
    return ok;
  };

  std::vector<const Node*> nodes;
  auto visit = [&](auto&& self, const Node& n) -> void {
    nodes.push_back(&n);
    for (const auto& c : n.children) self(self, *c);
  };
  visit(visit, tree);

  for (const Node* n : nodes) {
    if (n->kind == Node::Kind::Quant) {
      const std::size_t k = n->children.size();
      if (n->quant == QuantKind::Plus && k < 2) continue;
      for (std::size_t skip = 0; skip < k; ++skip) {
        std::vector<const Node*> kept;
        for (std::size_t i = 0; i < k; ++i)
          if (i != skip) kept.push_back(n->children[i].get());
        if (passes(render_with_children(tree, n, kept))) return false;
      }
    } else if (n->kind == Node::Kind::Rule) {
      for (const Node* cand : replacement_candidates(*n))
        if (passes(render_with_replacement(tree, n, cand))) return false;
    }
  }
  return true;
}

}  // namespace predred
