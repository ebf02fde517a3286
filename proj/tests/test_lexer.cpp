#include <catch2/catch_amalgamated.hpp>

#include "predred/lexer.hpp"

using namespace predred;

TEST_CASE("declaration statement lexes into five tokens", "[lexer]") {
  const LexResult r = tokenize("int x = 0;");
  REQUIRE(r.ok());
  REQUIRE(r.tokens.size() == 5);

  CHECK(r.tokens[0].cls == TokenClass::Keyword);
  CHECK(r.tokens[0].text == "int");
  CHECK(r.tokens[0].offset == 0);

  CHECK(r.tokens[1].cls == TokenClass::Ident);
  CHECK(r.tokens[1].text == "x");
  CHECK(r.tokens[1].offset == 4);

  CHECK(r.tokens[2].cls == TokenClass::Punct);
  CHECK(r.tokens[2].text == "=");

  CHECK(r.tokens[3].cls == TokenClass::IntLit);
  CHECK(r.tokens[3].text == "0");

  CHECK(r.tokens[4].cls == TokenClass::Punct);
  CHECK(r.tokens[4].text == ";");
}

TEST_CASE("string literal is a single token", "[lexer]") {
  const LexResult r = tokenize("\"conf/dubbo.properties\"");
  REQUIRE(r.ok());
  REQUIRE(r.tokens.size() == 1);
  CHECK(r.tokens[0].cls == TokenClass::StringLit);
  CHECK(r.tokens[0].text == "\"conf/dubbo.properties\"");

  const LexResult esc = tokenize("\"a\\\"b\"");
  REQUIRE(esc.ok());
  REQUIRE(esc.tokens.size() == 1);
  CHECK(esc.tokens[0].text == "\"a\\\"b\"");
}

TEST_CASE("whitespace and comments are discarded", "[lexer]") {
  const LexResult r = tokenize("a // line comment\n /* block\n comment */ b");
  REQUIRE(r.ok());
  REQUIRE(r.tokens.size() == 2);
  CHECK(r.tokens[0].text == "a");
  CHECK(r.tokens[1].text == "b");

  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("  \t\r\n").tokens.empty());
  CHECK(tokenize("").ok());
}

TEST_CASE("punctuation uses longest match", "[lexer]") {
  const LexResult r = tokenize("a==b");
  REQUIRE(r.ok());
  REQUIRE(r.tokens.size() == 3);
  CHECK(r.tokens[1].text == "==");

  const LexResult spread = tokenize("a = = b");
  REQUIRE(spread.tokens.size() == 4);
  CHECK(spread.tokens[1].text == "=");
  CHECK(spread.tokens[2].text == "=");

  for (const char* two : {"!=", "<=", ">=", "&&", "||"}) {
    const LexResult t = tokenize(two);
    REQUIRE(t.tokens.size() == 1);
    CHECK(t.tokens[0].text == two);
    CHECK(t.tokens[0].cls == TokenClass::Punct);
  }
}

TEST_CASE("keywords are reserved, identifiers are not", "[lexer]") {
  CHECK(tokenize("if").tokens[0].cls == TokenClass::Keyword);
  CHECK(tokenize("iffy").tokens[0].cls == TokenClass::Ident);
  CHECK(tokenize("instanceof").tokens[0].cls == TokenClass::Keyword);

  const LexResult r = tokenize("_x $y a1");
  REQUIRE(r.tokens.size() == 3);
  for (const Token& t : r.tokens) CHECK(t.cls == TokenClass::Ident);
}

TEST_CASE("annotation marker is its own token class", "[lexer]") {
  const LexResult r = tokenize("@Override");
  REQUIRE(r.tokens.size() == 2);
  CHECK(r.tokens[0].cls == TokenClass::Annot);
  CHECK(r.tokens[0].text == "@");
  CHECK(r.tokens[1].cls == TokenClass::Ident);
}

TEST_CASE("lex errors keep the prefix and report the offset", "[lexer]") {
  SECTION("unlexable byte") {
    const LexResult r = tokenize("int #");
    REQUIRE_FALSE(r.ok());
    CHECK(*r.error_offset == 4);
    REQUIRE(r.tokens.size() == 1);
    CHECK(r.tokens[0].text == "int");
  }
  SECTION("unterminated string") {
    const LexResult r = tokenize("x \"open");
    REQUIRE_FALSE(r.ok());
    CHECK(*r.error_offset == 2);
    CHECK(r.tokens.size() == 1);
  }
  SECTION("string does not span lines") {
    const LexResult r = tokenize("\"a\nb\"");
    REQUIRE_FALSE(r.ok());
    CHECK(*r.error_offset == 0);
  }
  SECTION("unterminated block comment") {
    const LexResult r = tokenize("a /* oops");
    REQUIRE_FALSE(r.ok());
    CHECK(*r.error_offset == 2);
  }
}

TEST_CASE("join_tokens round-trips through the lexer", "[lexer]") {
  const char* samples[] = {
      "int x = 0;",
      "void f(String[] args) { return a.b(1, \"s\"); }",
      "if (a <= b && !c) { throw new E(); }",
  };
  for (const char* src : samples) {
    const LexResult first = tokenize(src);
    REQUIRE(first.ok());
    const LexResult again = tokenize(join_tokens(first.tokens));
    REQUIRE(again.ok());
    REQUIRE(again.tokens.size() == first.tokens.size());
    for (std::size_t i = 0; i < first.tokens.size(); ++i) {
      CHECK(again.tokens[i].text == first.tokens[i].text);
      CHECK(again.tokens[i].cls == first.tokens[i].cls);
    }
  }
}
