#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "predred/features.hpp"
#include "predred/oracle.hpp"
#include "predred/parse_tree.hpp"

namespace predred {

struct UnknownVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Declaration sites in the bundled grammar. Method names, type names, and
// field accesses are deliberately not variables.
inline bool is_declaration_rule(const std::string& name) {
  return name == "param_name" || name == "var_name" || name == "catch_param";
}

inline void collect_vars(const Node& n, std::vector<std::string>& out) {
  if (n.kind == Node::Kind::Rule && is_declaration_rule(n.name)) {
    const TokenSeq decl = leaves(n);
    for (const Token& t : decl) {
      if (t.cls != TokenClass::Ident) continue;
      if (std::find(out.begin(), out.end(), t.text) == out.end())
        out.push_back(t.text);
      break;
    }
    return;
  }
  for (const auto& c : n.children) collect_vars(*c, out);
}

}  // namespace detail

/// Declared parameter, local-variable, and catch-parameter names, in
/// first-occurrence order, deduplicated.
inline std::vector<std::string> collect_variables(const Node& tree) {
  std::vector<std::string> out;
  detail::collect_vars(tree, out);
  return out;
}

/// Renames every IDENT leaf equal to `name` to "var" (name-based, whole
/// method; shadowing is not modeled) and returns the rendered text. The
/// token count is unchanged and the output re-parses.
inline std::string rename_variable(const Node& tree, const std::string& name) {
  const std::vector<std::string> vars = collect_variables(tree);
  if (std::find(vars.begin(), vars.end(), name) == vars.end())
    throw UnknownVariable("not a declared variable: " + name);
  NodePtr copy = clone(tree);
  auto visit = [&](auto&& self, Node& n) -> void {
    if (n.kind == Node::Kind::Terminal) {
      if (n.token.cls == TokenClass::Ident && n.token.text == name)
        n.token.text = "var";
      return;
    }
    for (auto& c : n.children) self(self, *c);
  };
  visit(visit, *copy);
  return render(*copy);
}

/// The three candidate sets: one rename per variable of the original; the
/// key set restricts to variables whose name is a key feature; the reduced
/// set renames variables of the reduced program.
struct AdversarialSets {
  std::vector<std::string> original;
  std::vector<std::string> key;
  std::vector<std::string> reduced;
};

inline AdversarialSets build_sets(const Node& original_tree,
                                  const Node* reduced_tree,
                                  const FeatureReport& report) {
  AdversarialSets sets;
  for (const std::string& v : collect_variables(original_tree)) {
    sets.original.push_back(rename_variable(original_tree, v));
    if (std::find(report.key.begin(), report.key.end(), v) != report.key.end())
      sets.key.push_back(rename_variable(original_tree, v));
  }
  if (reduced_tree)
    for (const std::string& v : collect_variables(*reduced_tree))
      sets.reduced.push_back(rename_variable(*reduced_tree, v));
  return sets;
}

struct AdversarialReport {
  std::string set_kind;
  int n_base{0};         // #Original programs contributing
  int n_transformed{0};  // #Transformed candidates
  int n_mispredicted{0};
  double rate{0.0};      // 0 when n_transformed == 0
};

inline AdversarialReport misprediction_stats(
    Oracle& oracle, const std::string& baseline,
    const std::vector<std::string>& candidates, std::string set_kind) {
  AdversarialReport r;
  r.set_kind = std::move(set_kind);
  r.n_base = 1;
  r.n_transformed = static_cast<int>(candidates.size());
  for (const std::string& c : candidates) {
    const Prediction p = oracle.predict_label(c);
    if (p.failure || p.label != baseline) ++r.n_mispredicted;
  }
  r.rate = r.n_transformed == 0
               ? 0.0
               : static_cast<double>(r.n_mispredicted) / r.n_transformed;
  return r;
}

inline void merge_into(AdversarialReport& total, const AdversarialReport& one) {
  total.n_base += one.n_base;
  total.n_transformed += one.n_transformed;
  total.n_mispredicted += one.n_mispredicted;
  total.rate = total.n_transformed == 0
                   ? 0.0
                   : static_cast<double>(total.n_mispredicted) /
                         total.n_transformed;
}

}  // namespace predred
