#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "predred/lexer.hpp"
#include "predred/parse_tree.hpp"
#include "predred/parser.hpp"

namespace predred {

struct EmptyInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// (node_type, token_value) pair. node_type is the leaf's parent rule or
/// quantifier name, or the lexer class name in fallback mode.
struct Element {
  std::string node_type;
  std::string value;

  friend bool operator==(const Element& a, const Element& b) {
    return a.node_type == b.node_type && a.value == b.value;
  }
  friend bool operator<(const Element& a, const Element& b) {
    return a.node_type != b.node_type ? a.node_type < b.node_type
                                      : a.value < b.value;
  }
};

namespace detail {

inline void collect_elements(const Node& n, const std::string& parent,
                             std::set<Element>& out) {
  if (n.kind == Node::Kind::Terminal) {
    if (n.token.cls != TokenClass::Punct)
      out.insert({parent, n.token.text});
    return;
  }
  const std::string name = n.kind == Node::Kind::Rule
                               ? n.name
                               : std::string(to_string(n.quant));
  for (const auto& c : n.children) collect_elements(*c, name, out);
}

}  // namespace detail

/// Unique (node_type, token_value) pairs of a reduced program, punctuation
/// excluded. Unparseable inputs (ddmin outputs) fall back to lexer classes
/// over the lexable prefix.
inline std::vector<Element> extract_elements(const std::string& reduced,
                                             const Parser& parser) {
  std::set<Element> out;
  const ParseResult pr = parse_text(parser, reduced);
  if (pr.ok()) {
    detail::collect_elements(*pr.tree, pr.tree->name, out);
  } else {
    const LexResult lexed = tokenize(reduced);
    for (const Token& t : lexed.tokens)
      if (t.cls != TokenClass::Punct)
        out.insert({std::string(to_string(t.cls)), t.text});
  }
  return {out.begin(), out.end()};
}

/// Candidate/key/sparse token partition for one label.
struct FeatureReport {
  std::string label;
  std::string model_id;
  std::string reducer_id;
  int n_programs{0};
  double threshold{0.5};
  std::map<std::string, int> candidate;  // token -> #programs containing it
  std::vector<std::string> key;          // freq desc, ties lexicographic
  std::set<std::string> sparse;
};

/// Per-program presence counting (set semantics); a token is key iff it
/// appears in at least threshold x n_programs programs (inclusive bound).
inline FeatureReport aggregate(const std::string& label,
                               const std::vector<std::string>& reduced_set,
                               double threshold, const Parser& parser) {
  if (reduced_set.empty())
    throw EmptyInput("aggregate: no reduced programs for label " + label);
  FeatureReport report;
  report.label = label;
  report.threshold = threshold;
  report.n_programs = static_cast<int>(reduced_set.size());

  for (const std::string& text : reduced_set) {
    std::set<std::string> values;
    for (const Element& e : extract_elements(text, parser))
      values.insert(e.value);
    for (const std::string& v : values) ++report.candidate[v];
  }

  const double need = threshold * report.n_programs;
  std::vector<std::pair<std::string, int>> keyed;
  for (const auto& [tok, count] : report.candidate) {
    if (static_cast<double>(count) >= need)
      keyed.emplace_back(tok, count);
    else
      report.sparse.insert(tok);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  for (auto& [tok, _] : keyed) report.key.push_back(std::move(tok));
  return report;
}

inline nlohmann::ordered_json feature_report_to_json(const FeatureReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["model_id"] = r.model_id;
  j["reducer_id"] = r.reducer_id;
  j["n_programs"] = r.n_programs;
  j["threshold"] = r.threshold;
  j["candidate"] = r.candidate;  // std::map: keys already sorted
  j["key"] = r.key;
  j["sparse"] = std::vector<std::string>(r.sparse.begin(), r.sparse.end());
  return j;
}

inline std::string features_csv(const std::vector<FeatureReport>& reports) {
  std::string csv = "label,model,reducer,n_programs,candidate_count,key_count\n";
  for (const FeatureReport& r : reports) {
    csv += r.label + "," + r.model_id + "," + r.reducer_id + "," +
           std::to_string(r.n_programs) + "," +
           std::to_string(r.candidate.size()) + "," +
           std::to_string(r.key.size()) + "\n";
  }
  return csv;
}

}  // namespace predred
