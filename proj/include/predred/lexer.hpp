#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string_view>
#include <unordered_set>

#include "predred/token.hpp"

namespace predred {

/// Lexing stops at the first unlexable byte; `tokens` then holds the
/// successfully lexed prefix and `error_offset` points at the bad byte.
struct LexResult {
  TokenSeq tokens;
  std::optional<std::size_t> error_offset;

  bool ok() const { return !error_offset.has_value(); }
};

namespace detail {

inline const std::unordered_set<std::string_view>& keyword_table() {
  static const std::unordered_set<std::string_view> kw = {
      "public", "private", "protected", "static",  "final",    "abstract",
      "synchronized", "void", "int",    "boolean", "char",     "long",
      "double", "float",  "byte",  "short", "if",   "else",    "return",
      "throw",  "throws", "try",   "catch", "new",  "super",   "instanceof",
      "true",   "false",  "null",  "this",
  };
  return kw;
}

// Longest match first within each leading character.
inline constexpr std::array<std::string_view, 24> punct_table = {
    "==", "!=", "<=", ">=", "&&", "||", "=", "+", "-", "*", "/", "%",
    "<",  ">",  "!",  ".",  ",",  ";",  "(", ")", "{", "}", "[", "]",
};

inline bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

inline bool is_ident_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

}  // namespace detail

/// Longest-match lexer for the MiniJava token set. Whitespace and both
/// comment styles are discarded; keywords are reserved words, never IDENTs.
inline LexResult tokenize(std::string_view source) {
  LexResult result;
  std::size_t i = 0;
  const std::size_t n = source.size();

  while (i < n) {
    const char c = source[i];

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '/') {
      while (i < n && source[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '*') {
      const std::size_t start = i;
      i += 2;
      while (i + 1 < n && !(source[i] == '*' && source[i + 1] == '/')) ++i;
      if (i + 1 >= n) {
        result.error_offset = start;  // unterminated block comment
        return result;
      }
      i += 2;
      continue;
    }

    if (detail::is_ident_start(c)) {
      const std::size_t start = i;
      while (i < n && detail::is_ident_part(source[i])) ++i;
      std::string text(source.substr(start, i - start));
      const auto cls = detail::keyword_table().count(text) ? TokenClass::Keyword
                                                           : TokenClass::Ident;
      result.tokens.push_back({cls, std::move(text), start});
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
      result.tokens.push_back(
          {TokenClass::IntLit, std::string(source.substr(start, i - start)), start});
      continue;
    }

    if (c == '"') {
      const std::size_t start = i;
      ++i;
      bool closed = false;
      while (i < n) {
        if (source[i] == '\\' && i + 1 < n) {
          i += 2;
          continue;
        }
        if (source[i] == '"') {
          ++i;
          closed = true;
          break;
        }
        if (source[i] == '\n') break;  // strings do not span lines
        ++i;
      }
      if (!closed) {
        result.error_offset = start;  // unterminated string literal
        return result;
      }
      result.tokens.push_back(
          {TokenClass::StringLit, std::string(source.substr(start, i - start)), start});
      continue;
    }

    if (c == '@') {
      result.tokens.push_back({TokenClass::Annot, "@", i});
      ++i;
      continue;
    }

    bool matched = false;
    for (std::string_view p : detail::punct_table) {
      if (source.substr(i, p.size()) == p) {
        result.tokens.push_back({TokenClass::Punct, std::string(p), i});
        i += p.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;

    result.error_offset = i;
    return result;
  }

  return result;
}

}  // namespace predred
