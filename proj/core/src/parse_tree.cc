// Copyright 2026 The tempdistill Authors.
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

#include "tempdistill/parse_tree.h"

#include <cctype>

#include "tempdistill/errors.h"

namespace tempdistill {

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void SkipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool AtEnd() {
    SkipSpace();
    return pos >= text.size();
  }
  char Peek() {
    SkipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }
  std::string_view Atom() {
    SkipSpace();
    const size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return text.substr(start, pos - start);
  }
};

}  // namespace

ParseTree ParseTree::Parse(std::string_view bracketed) {
  ParseTree tree;
  Lexer lex{bracketed};
  if (lex.Peek() != '(') throw Error("malformed tree: expected '('");

  // Iterative descent: `open` holds the node ids whose ')' is pending.
  std::vector<int> open;
  while (true) {
    const char c = lex.Peek();
    if (c == '(') {
      ++lex.pos;
      Node node;
      node.label = std::string(lex.Atom());
      node.parent = open.empty() ? -1 : open.back();
      if (open.empty() && !tree.nodes_.empty()) throw Error("malformed tree: multiple roots");
      const int id = static_cast<int>(tree.nodes_.size());
      if (node.parent >= 0) tree.nodes_[node.parent].children.push_back(id);
      tree.nodes_.push_back(std::move(node));
      open.push_back(id);
    } else if (c == ')') {
      ++lex.pos;
      if (open.empty()) throw Error("malformed tree: unbalanced ')'");
      if (tree.nodes_[open.back()].children.empty()) {
        throw Error("malformed tree: empty constituent '" + tree.nodes_[open.back()].label + "'");
      }
      open.pop_back();
      if (open.empty()) break;
    } else if (c == '\0') {
      throw Error("malformed tree: unbalanced '('");
    } else {
      // A word: only allowed as the single child of a preterminal.
      const int parent = open.back();
      if (!tree.nodes_[parent].children.empty()) {
        throw Error("malformed tree: word '" + std::string(lex.Atom()) + "' beside constituents");
      }
      Node word;
      word.label = std::string(lex.Atom());
      word.parent = parent;
      word.token = static_cast<int>(tree.words_.size());
      const int id = static_cast<int>(tree.nodes_.size());
      tree.nodes_[parent].children.push_back(id);
      tree.nodes_.push_back(std::move(word));
      tree.words_.push_back(id);
      if (lex.Peek() != ')') throw Error("malformed tree: preterminal with more than one word");
    }
  }
  if (!lex.AtEnd()) throw Error("malformed tree: trailing text");
  // Preterminals must not mix words and constituents.
  for (const Node &node : tree.nodes_) {
    if (node.token >= 0) continue;
    for (int child : node.children) {
      if (tree.nodes_[child].token >= 0 && node.children.size() != 1) {
        throw Error("malformed tree: preterminal '" + node.label + "' has extra children");
      }
    }
  }
  return tree;
}

bool ParseTree::IsPreterminal(int id) const {
  const Node &n = nodes_[id];
  return n.children.size() == 1 && nodes_[n.children[0]].token >= 0;
}

std::vector<std::string> ParseTree::LeafWords() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (int id : words_) out.push_back(nodes_[id].label);
  return out;
}

std::vector<int> ParseTree::TokensUnder(int id) const {
  std::vector<int> out;
  std::vector<int> stack = {id};
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (nodes_[cur].token >= 0) out.push_back(nodes_[cur].token);
    const auto &children = nodes_[cur].children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

bool ParseTree::Dominates(int ancestor, int id) const {
  for (int cur = id; cur >= 0; cur = nodes_[cur].parent) {
    if (cur == ancestor) return true;
  }
  return false;
}

std::string ParseTree::ToString() const {
  std::string out;
  // Pre-order with explicit close markers.
  std::vector<std::pair<int, bool>> stack = {{0, false}};
  while (!stack.empty()) {
    auto [id, closing] = stack.back();
    stack.pop_back();
    if (closing) {
      out.push_back(')');
      continue;
    }
    const Node &n = nodes_[id];
    if (n.token >= 0) {
      out.push_back(' ');
      out += n.label;
      continue;
    }
    if (n.parent >= 0) out.push_back(' ');
    out.push_back('(');
    out += n.label;
    stack.push_back({id, true});
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back({*it, false});
  }
  return out;
}

std::string_view BaseLabel(std::string_view label) {
  if (label.empty() || label[0] == '-') return label;
  const size_t cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

std::string UnescapeTreeWord(std::string_view word) {
  if (word == "-LRB-") return "(";
  if (word == "-RRB-") return ")";
  if (word == "-LSB-") return "[";
  if (word == "-RSB-") return "]";
  if (word == "-LCB-") return "{";
  if (word == "-RCB-") return "}";
  return std::string(word);
}

}  // namespace tempdistill
