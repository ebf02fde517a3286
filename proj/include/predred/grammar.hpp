#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "predred/lexer.hpp"
#include "predred/token.hpp"

namespace predred {

enum class QuantKind { Star, Plus, Optional };

inline std::string_view to_string(QuantKind kind) {
  switch (kind) {
    case QuantKind::Star: return "star";
    case QuantKind::Plus: return "plus";
    case QuantKind::Optional: return "optional";
  }
  return "star";
}

struct GrammarError : std::runtime_error {
  int line;

  GrammarError(int line_, const std::string& reason)
      : std::runtime_error("grammar error (line " + std::to_string(line_) +
                           "): " + reason),
        line(line_) {}
};

enum class SymbolKind { Literal, ClassRef, NonterminalRef };

/// One matchable unit of an alternative. Literals match a token by exact
/// lexeme, class refs by token class, nonterminal refs by rule name.
struct Symbol {
  SymbolKind kind{SymbolKind::Literal};
  std::string text;                      // lexeme or rule name
  TokenClass cls{TokenClass::Ident};     // ClassRef only

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.text == b.text && a.cls == b.cls;
  }
};

struct Rule {
  std::string name;
  std::vector<std::vector<Symbol>> alternatives;
  bool synthesized{false};               // quantifier rule from normalization
  QuantKind quant{QuantKind::Star};      // meaningful when synthesized
};

/// Normalized grammar: inline quantifiers have been hoisted into synthesized
/// rules, so alternatives contain plain symbols only. The start rule is the
/// first rule of the source file.
class Grammar {
 public:
  static Grammar load(std::string_view text);

  const std::vector<Rule>& rules() const { return rules_; }
  const std::string& start() const { return rules_.front().name; }

  const Rule* find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &rules_[it->second];
  }
  std::size_t index_of(std::string_view name) const {
    return index_.at(std::string(name));
  }

 private:
  std::vector<Rule> rules_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

inline std::optional<TokenClass> class_by_name(std::string_view name) {
  if (name == "KEYWORD") return TokenClass::Keyword;
  if (name == "IDENT") return TokenClass::Ident;
  if (name == "INT_LIT") return TokenClass::IntLit;
  if (name == "STRING_LIT") return TokenClass::StringLit;
  if (name == "PUNCT") return TokenClass::Punct;
  if (name == "ANNOT") return TokenClass::Annot;
  return std::nullopt;
}

struct DslToken {
  enum Kind { Ident, String, Define, Pipe, Semi, Star, Plus, Question, End };
  Kind kind;
  std::string text;
  int line;
};

inline std::vector<DslToken> scan_dsl(std::string_view text) {
  std::vector<DslToken> out;
  std::size_t i = 0;
  int line = 1;
  const std::size_t n = text.size();

  while (i < n) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (c == ':' ) {
      if (i + 1 < n && text[i + 1] == '=') {
        out.push_back({DslToken::Define, ":=", line});
        i += 2;
        continue;
      }
      throw GrammarError(line, "expected ':='");
    }
    if (c == '|') { out.push_back({DslToken::Pipe, "|", line}); ++i; continue; }
    if (c == ';') { out.push_back({DslToken::Semi, ";", line}); ++i; continue; }
    if (c == '*') { out.push_back({DslToken::Star, "*", line}); ++i; continue; }
    if (c == '+') { out.push_back({DslToken::Plus, "+", line}); ++i; continue; }
    if (c == '?') { out.push_back({DslToken::Question, "?", line}); ++i; continue; }
    if (c == '"') {
      std::string value;
      ++i;
      bool closed = false;
      while (i < n) {
        if (text[i] == '\\' && i + 1 < n) {
          value.push_back(text[i + 1]);
          i += 2;
          continue;
        }
        if (text[i] == '"') { ++i; closed = true; break; }
        if (text[i] == '\n') break;
        value.push_back(text[i]);
        ++i;
      }
      if (!closed) throw GrammarError(line, "unterminated terminal literal");
      out.push_back({DslToken::String, std::move(value), line});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                       text[i] == '_'))
        ++i;
      out.push_back({DslToken::Ident, std::string(text.substr(start, i - start)), line});
      continue;
    }
    throw GrammarError(line, std::string("unexpected character '") + c + "'");
  }
  out.push_back({DslToken::End, "", line});
  return out;
}

struct RawElement {
  Symbol sym;
  std::optional<QuantKind> quant;
  int line;
};

struct RawRule {
  std::string name;
  std::vector<std::vector<RawElement>> alternatives;
  int line;
};

}  // namespace detail

inline Grammar Grammar::load(std::string_view text) {
  using detail::DslToken;
  const auto toks = detail::scan_dsl(text);
  std::size_t pos = 0;
  auto peek = [&]() -> const DslToken& { return toks[pos]; };
  auto next = [&]() -> const DslToken& { return toks[pos++]; };

  std::vector<detail::RawRule> raw;
  while (peek().kind != DslToken::End) {
    if (peek().kind != DslToken::Ident)
      throw GrammarError(peek().line, "expected rule name");
    detail::RawRule rule;
    rule.name = peek().text;
    rule.line = peek().line;
    next();
    if (peek().kind != DslToken::Define)
      throw GrammarError(peek().line, "expected ':=' after rule name");
    next();

    std::vector<detail::RawElement> alt;
    auto flush_alt = [&](int line) {
      if (alt.empty())
        throw GrammarError(line, "empty alternative (use '?' for epsilon)");
      rule.alternatives.push_back(std::move(alt));
      alt.clear();
    };

    for (;;) {
      const DslToken& t = peek();
      if (t.kind == DslToken::Semi) {
        flush_alt(t.line);
        next();
        break;
      }
      if (t.kind == DslToken::Pipe) {
        flush_alt(t.line);
        next();
        continue;
      }
      if (t.kind == DslToken::End)
        throw GrammarError(t.line, "missing ';' at end of rule '" + rule.name + "'");

      detail::RawElement el;
      el.line = t.line;
      if (t.kind == DslToken::String) {
        if (t.text.empty())
          throw GrammarError(t.line, "empty terminal literal");
        el.sym = {SymbolKind::Literal, t.text, TokenClass::Ident};
      } else if (t.kind == DslToken::Ident) {
        if (auto cls = detail::class_by_name(t.text)) {
          el.sym = {SymbolKind::ClassRef, t.text, *cls};
        } else {
          el.sym = {SymbolKind::NonterminalRef, t.text, TokenClass::Ident};
        }
      } else {
        throw GrammarError(t.line, "expected symbol, '|' or ';'");
      }
      next();

      if (peek().kind == DslToken::Star) { el.quant = QuantKind::Star; next(); }
      else if (peek().kind == DslToken::Plus) { el.quant = QuantKind::Plus; next(); }
      else if (peek().kind == DslToken::Question) { el.quant = QuantKind::Optional; next(); }
      if (peek().kind == DslToken::Star || peek().kind == DslToken::Plus ||
          peek().kind == DslToken::Question)
        throw GrammarError(peek().line, "chained quantifiers are not allowed");
      alt.push_back(std::move(el));
    }
    raw.push_back(std::move(rule));
  }

  if (raw.empty()) throw GrammarError(1, "grammar defines no rules");

  Grammar g;
  std::map<std::tuple<int, int, std::string, int>, std::string> quant_names;
  std::vector<Rule> quant_rules;
  int quant_counter = 0;

  auto hoist = [&](const detail::RawElement& el) -> Symbol {
    if (!el.quant) return el.sym;
    const auto key = std::make_tuple(static_cast<int>(*el.quant),
                                     static_cast<int>(el.sym.kind), el.sym.text,
                                     static_cast<int>(el.sym.cls));
    auto it = quant_names.find(key);
    if (it == quant_names.end()) {
      std::string qname = "$q" + std::to_string(quant_counter++);
      Rule qr;
      qr.name = qname;
      qr.synthesized = true;
      qr.quant = *el.quant;
      const Symbol self{SymbolKind::NonterminalRef, qname, TokenClass::Ident};
      switch (*el.quant) {
        case QuantKind::Star:
          qr.alternatives = {{el.sym, self}, {}};
          break;
        case QuantKind::Plus:
          qr.alternatives = {{el.sym, self}, {el.sym}};
          break;
        case QuantKind::Optional:
          qr.alternatives = {{el.sym}, {}};
          break;
      }
      quant_rules.push_back(std::move(qr));
      it = quant_names.emplace(key, qname).first;
    }
    return {SymbolKind::NonterminalRef, it->second, TokenClass::Ident};
  };

  for (const auto& rr : raw) {
    Rule rule;
    rule.name = rr.name;
    for (const auto& ralt : rr.alternatives) {
      std::vector<Symbol> alt;
      alt.reserve(ralt.size());
      for (const auto& el : ralt) alt.push_back(hoist(el));
      rule.alternatives.push_back(std::move(alt));
    }
    g.rules_.push_back(std::move(rule));
  }
  for (auto& qr : quant_rules) g.rules_.push_back(std::move(qr));

  for (std::size_t i = 0; i < g.rules_.size(); ++i) {
    if (!g.index_.emplace(g.rules_[i].name, i).second)
      throw GrammarError(0, "duplicate rule '" + g.rules_[i].name + "'");
  }

  for (const auto& rule : g.rules_) {
    for (const auto& alt : rule.alternatives) {
      for (const auto& sym : alt) {
        if (sym.kind == SymbolKind::NonterminalRef && !g.index_.count(sym.text))
          throw GrammarError(0, "undefined nonterminal '" + sym.text +
                                    "' referenced from rule '" + rule.name + "'");
        if (sym.kind == SymbolKind::Literal) {
          const LexResult lexed = tokenize(sym.text);
          if (!lexed.ok() || lexed.tokens.size() != 1 ||
              lexed.tokens[0].text != sym.text)
            throw GrammarError(0, "terminal literal \"" + sym.text +
                                      "\" is not a single lexer token");
        }
      }
    }
  }

  return g;
}

}  // namespace predred
