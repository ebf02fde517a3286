#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace predred {

enum class TokenClass {
  Keyword,
  Ident,
  IntLit,
  StringLit,
  Punct,
  Annot,
};

inline std::string_view to_string(TokenClass cls) {
  switch (cls) {
    case TokenClass::Keyword: return "KEYWORD";
    case TokenClass::Ident: return "IDENT";
    case TokenClass::IntLit: return "INT_LIT";
    case TokenClass::StringLit: return "STRING_LIT";
    case TokenClass::Punct: return "PUNCT";
    case TokenClass::Annot: return "ANNOT";
  }
  return "UNKNOWN";
}

struct Token {
  TokenClass cls{TokenClass::Ident};
  std::string text;     // exact lexeme, always non-empty
  std::size_t offset{0};  // byte index into the source

  friend bool operator==(const Token& a, const Token& b) {
    return a.cls == b.cls && a.text == b.text;
  }
};

using TokenSeq = std::vector<Token>;

/// Joins lexemes with single spaces; the inverse of lexing up to layout.
inline std::string join_tokens(const TokenSeq& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.text;
  }
  return out;
}

}  // namespace predred
