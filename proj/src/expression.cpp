// Copyright 2026 The revsynth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revsynth/expression.hpp"

#include <memory>
#include <optional>
#include <unordered_map>

namespace revsynth {

namespace {

struct Node {
  enum class Op { Var, Not, And, Xor, Or } op;
  int var = -1;  // for Var
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;  // unused for Not
};

using NodePtr = std::unique_ptr<Node>;

// Recursive-descent parser over the grammar in the header. Keeps a character
// position for error reporting and assigns variable indices on the fly.
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* var_order)
      : text_(text) {
    if (var_order) {
      fixed_vars_ = true;
      for (const std::string& name : *var_order) {
        if (var_ids_.count(name)) {
          throw ParseError("duplicate variable '" + name + "' in var_order", 0);
        }
        var_ids_.emplace(name, int(var_names_.size()));
        var_names_.push_back(name);
      }
      check_var_count(0);
    }
  }

  NodePtr parse() {
    NodePtr root = parse_expr();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected character");
    if (var_names_.empty()) fail("expression contains no variables");
    return root;
  }

  int num_vars() const { return int(var_names_.size()); }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }

  void check_var_count(std::size_t position) const {
    if (var_names_.size() > kMaxTableVars) {
      throw ParseError("more than 16 variables", position);
    }
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  std::optional<char> peek() {
    skip_spaces();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (auto c = peek()) {
      if (*c != '^' && *c != '|') break;
      ++pos_;
      NodePtr rhs = parse_term();
      auto node = std::make_unique<Node>();
      node->op = *c == '^' ? Node::Op::Xor : Node::Op::Or;
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (auto c = peek()) {
      if (*c != '&') break;
      ++pos_;
      NodePtr rhs = parse_factor();
      auto node = std::make_unique<Node>();
      node->op = Node::Op::And;
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  NodePtr parse_factor() {
    auto c = peek();
    if (!c) fail("unexpected end of expression");
    if (*c == '~') {
      ++pos_;
      auto node = std::make_unique<Node>();
      node->op = Node::Op::Not;
      node->lhs = parse_factor();
      return node;
    }
    if (*c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (peek() != std::optional<char>(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (*c >= 'a' && *c <= 'z') return parse_ident();
    fail("expected '~', '(' or identifier");
  }

  NodePtr parse_ident() {
    const std::size_t start = pos_;
    std::string name(1, text_[pos_++]);
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
      name += text_[pos_++];
    }
    auto it = var_ids_.find(name);
    int id;
    if (it != var_ids_.end()) {
      id = it->second;
    } else if (fixed_vars_) {
      throw ParseError("unknown variable '" + name + "' at position " +
                           std::to_string(start),
                       start);
    } else {
      id = int(var_names_.size());
      var_ids_.emplace(name, id);
      var_names_.push_back(name);
      check_var_count(start);
    }
    auto node = std::make_unique<Node>();
    node->op = Node::Op::Var;
    node->var = id;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool fixed_vars_ = false;
  std::unordered_map<std::string, int> var_ids_;
  std::vector<std::string> var_names_;
};

bool evaluate(const Node& node, uint32_t input) {
  switch (node.op) {
    case Node::Op::Var:
      return (input >> node.var) & 1;
    case Node::Op::Not:
      return !evaluate(*node.lhs, input);
    case Node::Op::And:
      return evaluate(*node.lhs, input) && evaluate(*node.rhs, input);
    case Node::Op::Xor:
      return evaluate(*node.lhs, input) != evaluate(*node.rhs, input);
    case Node::Op::Or:
      return evaluate(*node.lhs, input) || evaluate(*node.rhs, input);
  }
  return false;
}

TruthTable build_table(const Node& root, int num_vars) {
  std::vector<uint8_t> bits(size_t(1) << num_vars);
  for (uint32_t x = 0; x < bits.size(); ++x) bits[x] = evaluate(root, x);
  return TruthTable(num_vars, std::move(bits));
}

}  // namespace

TruthTable parse_expression(std::string_view text) {
  Parser parser(text, nullptr);
  NodePtr root = parser.parse();
  return build_table(*root, parser.num_vars());
}

TruthTable parse_expression(std::string_view text,
                            const std::vector<std::string>& var_order) {
  Parser parser(text, &var_order);
  NodePtr root = parser.parse();
  return build_table(*root, parser.num_vars());
}

}  // namespace revsynth
