#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "predred/grammar.hpp"
#include "predred/token.hpp"

namespace predred {

/// Parse-tree node. Terminals carry the token; rule nodes carry the
/// nonterminal name; quant nodes carry the quantifier kind and hold the
/// flattened element list (a star/optional node may be empty, plus never is).
struct Node {
  enum class Kind { Terminal, Rule, Quant };

  Kind kind{Kind::Rule};
  Token token;                                  // Terminal
  std::string name;                             // Rule
  QuantKind quant{QuantKind::Star};             // Quant
  std::vector<std::unique_ptr<Node>> children;
  Node* parent{nullptr};
  std::size_t token_count{0};
};

using NodePtr = std::unique_ptr<Node>;

inline NodePtr make_terminal(Token token) {
  auto n = std::make_unique<Node>();
  n->kind = Node::Kind::Terminal;
  n->token = std::move(token);
  n->token_count = 1;
  return n;
}

inline NodePtr make_rule(std::string name) {
  auto n = std::make_unique<Node>();
  n->kind = Node::Kind::Rule;
  n->name = std::move(name);
  return n;
}

inline NodePtr make_quant(QuantKind kind) {
  auto n = std::make_unique<Node>();
  n->kind = Node::Kind::Quant;
  n->quant = kind;
  return n;
}

/// Recomputes token_count and parent links for the whole subtree. Cheap for
/// corpus-sized trees; call after any structural mutation.
inline std::size_t refresh(Node& node) {
  if (node.kind == Node::Kind::Terminal) {
    node.token_count = 1;
    return 1;
  }
  std::size_t total = 0;
  for (auto& child : node.children) {
    child->parent = &node;
    total += refresh(*child);
  }
  node.token_count = total;
  return total;
}

inline void collect_leaves(const Node& node, TokenSeq& out) {
  if (node.kind == Node::Kind::Terminal) {
    out.push_back(node.token);
    return;
  }
  for (const auto& child : node.children) collect_leaves(*child, out);
}

inline TokenSeq leaves(const Node& node) {
  TokenSeq out;
  out.reserve(node.token_count);
  collect_leaves(node, out);
  return out;
}

/// In-order terminal lexemes joined by single spaces.
inline std::string render(const Node& node) {
  return join_tokens(leaves(node));
}

inline NodePtr clone(const Node& node) {
  auto copy = std::make_unique<Node>();
  copy->kind = node.kind;
  copy->token = node.token;
  copy->name = node.name;
  copy->quant = node.quant;
  copy->token_count = node.token_count;
  copy->children.reserve(node.children.size());
  for (const auto& child : node.children) {
    auto c = clone(*child);
    c->parent = copy.get();
    copy->children.push_back(std::move(c));
  }
  return copy;
}

}  // namespace predred
