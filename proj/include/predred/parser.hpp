#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "predred/grammar.hpp"
#include "predred/lexer.hpp"
#include "predred/parse_tree.hpp"
#include "predred/token.hpp"

namespace predred {

struct ParseResult {
  NodePtr tree;                             // null on failure
  std::optional<std::size_t> error_offset;  // byte offset of offending token

  bool ok() const { return tree != nullptr; }
};

/// Earley parser over a normalized Grammar. Immutable after construction and
/// shareable across threads; each parse keeps its own chart. Ambiguity is
/// resolved by first-listed alternative, then greedy (longest-span) matching
/// left to right, so identical inputs always yield identical trees.
class Parser {
 public:
  explicit Parser(const Grammar& grammar) : grammar_(&grammar) { compile(); }

  /// Recognition only. Returns nullopt on success, else the byte offset of
  /// the first offending token (or one past the input when it ends early).
  std::optional<std::size_t> recognize(const TokenSeq& tokens) const {
    Chart chart;
    return run(tokens, chart, false);
  }

  ParseResult parse(const TokenSeq& tokens) const {
    Chart chart;
    if (auto err = run(tokens, chart, true)) return {nullptr, err};
    Builder builder{this, &tokens, &chart, {}};
    NodePtr root = builder.derive(start_, 0, static_cast<int>(tokens.size()));
    if (!root) return {nullptr, tokens.empty() ? 0 : tokens[0].offset};
    refresh(*root);
    return {std::move(root), std::nullopt};
  }

 private:
  struct CSym {
    enum K { Lit, Cls, Nt } k{Lit};
    std::string text;
    TokenClass cls{TokenClass::Ident};
    int nt{-1};
  };
  struct CProd {
    int lhs;
    std::vector<CSym> rhs;
  };
  struct Item {
    int prod, dot, origin;
  };
  struct Chart {
    // (nt, start) -> ascending list of completed end positions
    std::unordered_map<std::uint64_t, std::vector<int>> ends;
  };

  static bool matches(const CSym& sym, const Token& tok) {
    return sym.k == CSym::Lit ? tok.text == sym.text : tok.cls == sym.cls;
  }
  static std::uint64_t span_key(int nt, int start) {
    return (static_cast<std::uint64_t>(nt) << 32) |
           static_cast<std::uint32_t>(start);
  }

  void compile() {
    const auto& rules = grammar_->rules();
    prods_of_.resize(rules.size());
    for (std::size_t r = 0; r < rules.size(); ++r) {
      for (const auto& alt : rules[r].alternatives) {
        CProd prod;
        prod.lhs = static_cast<int>(r);
        for (const Symbol& sym : alt) {
          CSym cs;
          if (sym.kind == SymbolKind::Literal) {
            cs.k = CSym::Lit;
            cs.text = sym.text;
          } else if (sym.kind == SymbolKind::ClassRef) {
            cs.k = CSym::Cls;
            cs.cls = sym.cls;
          } else {
            cs.k = CSym::Nt;
            cs.nt = static_cast<int>(grammar_->index_of(sym.text));
          }
          prod.rhs.push_back(std::move(cs));
        }
        prods_of_[r].push_back(static_cast<int>(prods_.size()));
        prods_.push_back(std::move(prod));
      }
    }
    start_ = 0;

    nullable_.assign(rules.size(), false);
    for (bool changed = true; changed;) {
      changed = false;
      for (const CProd& p : prods_) {
        if (nullable_[p.lhs]) continue;
        bool all = true;
        for (const CSym& s : p.rhs)
          if (s.k != CSym::Nt || !nullable_[s.nt]) { all = false; break; }
        if (all) { nullable_[p.lhs] = true; changed = true; }
      }
    }
  }

  std::optional<std::size_t> run(const TokenSeq& tokens, Chart& chart,
                                 bool record) const {
    const int n = static_cast<int>(tokens.size());
    std::vector<std::vector<Item>> sets(n + 1);
    std::vector<std::unordered_set<std::uint64_t>> seen(n + 1);
    auto add = [&](int set, int prod, int dot, int origin) {
      const std::uint64_t key = (static_cast<std::uint64_t>(prod) << 40) |
                                (static_cast<std::uint64_t>(dot) << 32) |
                                static_cast<std::uint32_t>(origin);
      if (seen[set].insert(key).second) sets[set].push_back({prod, dot, origin});
    };

    for (int p : prods_of_[start_]) add(0, p, 0, 0);

    for (int i = 0; i <= n; ++i) {
      if (sets[i].empty())
        return i > 0 ? tokens[i - 1].offset : std::size_t{0};
      for (std::size_t w = 0; w < sets[i].size(); ++w) {
        const Item it = sets[i][w];
        const CProd& pr = prods_[it.prod];
        if (it.dot < static_cast<int>(pr.rhs.size())) {
          const CSym& sym = pr.rhs[it.dot];
          if (sym.k == CSym::Nt) {
            for (int p : prods_of_[sym.nt]) add(i, p, 0, i);
            if (nullable_[sym.nt]) add(i, it.prod, it.dot + 1, it.origin);
          } else if (i < n && matches(sym, tokens[i])) {
            add(i + 1, it.prod, it.dot + 1, it.origin);
          }
        } else {
          if (record) chart.ends[span_key(pr.lhs, it.origin)].push_back(i);
          auto& src = sets[it.origin];
          for (std::size_t k = 0; k < src.size(); ++k) {
            const Item par = src[k];
            const CProd& pp = prods_[par.prod];
            if (par.dot < static_cast<int>(pp.rhs.size()) &&
                pp.rhs[par.dot].k == CSym::Nt && pp.rhs[par.dot].nt == pr.lhs)
              add(i, par.prod, par.dot + 1, par.origin);
          }
        }
      }
    }

    for (const Item& it : sets[n]) {
      const CProd& pr = prods_[it.prod];
      if (pr.lhs == start_ && it.origin == 0 &&
          it.dot == static_cast<int>(pr.rhs.size())) {
        if (record)
          for (auto& [key, ends] : chart.ends) {
            std::sort(ends.begin(), ends.end());
            ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
          }
        return std::nullopt;
      }
    }
    if (tokens.empty()) return std::size_t{0};
    return tokens.back().offset + tokens.back().text.size();
  }

  struct Builder {
    const Parser* parser;
    const TokenSeq* tokens;
    const Chart* chart;
    std::unordered_set<std::uint64_t> failed;  // (prod, dot, pos, end)

    static std::uint64_t pack(int prod, int dot, int pos, int end) {
      return (static_cast<std::uint64_t>(prod) << 48) |
             (static_cast<std::uint64_t>(dot) << 40) |
             (static_cast<std::uint64_t>(pos) << 20) |
             static_cast<std::uint64_t>(end);
    }

    NodePtr derive(int nt, int i, int j) {
      for (int p : parser->prods_of_[nt]) {
        std::vector<NodePtr> kids;
        if (match_seq(p, 0, i, j, kids)) return assemble(nt, std::move(kids));
      }
      return nullptr;
    }

    bool match_seq(int prod, int dot, int pos, int end,
                   std::vector<NodePtr>& out) {
      const CProd& pr = parser->prods_[prod];
      if (dot == static_cast<int>(pr.rhs.size())) return pos == end;
      const std::uint64_t key = pack(prod, dot, pos, end);
      if (failed.count(key)) return false;

      const CSym& sym = pr.rhs[dot];
      if (sym.k != CSym::Nt) {
        if (pos < end && matches(sym, (*tokens)[pos])) {
          std::vector<NodePtr> rest;
          if (match_seq(prod, dot + 1, pos + 1, end, rest)) {
            out.push_back(make_terminal((*tokens)[pos]));
            for (auto& r : rest) out.push_back(std::move(r));
            return true;
          }
        }
        failed.insert(key);
        return false;
      }

      auto it = chart->ends.find(span_key(sym.nt, pos));
      if (it != chart->ends.end()) {
        const auto& ends = it->second;
        for (auto rit = ends.rbegin(); rit != ends.rend(); ++rit) {
          const int mid = *rit;
          if (mid > end) continue;
          std::vector<NodePtr> rest;
          if (!match_seq(prod, dot + 1, mid, end, rest)) continue;
          NodePtr child = derive(sym.nt, pos, mid);
          if (!child) continue;
          out.push_back(std::move(child));
          for (auto& r : rest) out.push_back(std::move(r));
          return true;
        }
      }
      failed.insert(key);
      return false;
    }

    /// Rule nodes keep their name; synthesized quant rules collapse into a
    /// single Quant node (the recursive tail's children are spliced in).
    NodePtr assemble(int nt, std::vector<NodePtr> kids) {
      const Rule& rule = parser->grammar_->rules()[nt];
      if (!rule.synthesized) {
        NodePtr node = make_rule(rule.name);
        node->children = std::move(kids);
        return node;
      }
      NodePtr node = make_quant(rule.quant);
      if (kids.size() == 2) {
        node->children.push_back(std::move(kids[0]));
        for (auto& c : kids[1]->children) node->children.push_back(std::move(c));
      } else if (kids.size() == 1) {
        node->children.push_back(std::move(kids[0]));
      }
      return node;
    }
  };

  const Grammar* grammar_;
  std::vector<CProd> prods_;
  std::vector<std::vector<int>> prods_of_;
  std::vector<bool> nullable_;
  int start_{0};
};

inline std::optional<std::size_t> recognize_text(const Parser& parser,
                                                 std::string_view source) {
  const LexResult lexed = tokenize(source);
  if (!lexed.ok()) return lexed.error_offset;
  return parser.recognize(lexed.tokens);
}

inline ParseResult parse_text(const Parser& parser, std::string_view source) {
  const LexResult lexed = tokenize(source);
  if (!lexed.ok()) return {nullptr, lexed.error_offset};
  return parser.parse(lexed.tokens);
}

}  // namespace predred
