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

#ifndef TEMPDISTILL_PARSE_TREE_H_
#define TEMPDISTILL_PARSE_TREE_H_

#include <string>
#include <string_view>
#include <vector>

namespace tempdistill {

// A bracketed constituency tree, e.g.
//   (ROOT (S (NP (PRP he)) (VP (VBD left))))
// Nodes are stored in pre-order; node 0 is the root. Word nodes carry the
// 0-based token index of the leaf; preterminals are the parents of words.
class ParseTree {
 public:
  struct Node {
    std::string label;
    int parent = -1;
    std::vector<int> children;
    int token = -1;  // >= 0 for word nodes
  };

  // Throws Error on unbalanced brackets or empty input.
  static ParseTree Parse(std::string_view bracketed);

  int size() const { return static_cast<int>(nodes_.size()); }
  const Node &node(int id) const { return nodes_[id]; }
  int root() const { return 0; }

  bool IsWord(int id) const { return nodes_[id].token >= 0; }
  bool IsPreterminal(int id) const;

  int leaf_count() const { return static_cast<int>(words_.size()); }
  // Word node of the i-th leaf.
  int word(int token) const { return words_[token]; }
  // Preterminal (POS) node of the i-th leaf.
  int preterminal(int token) const { return nodes_[words_[token]].parent; }
  std::vector<std::string> LeafWords() const;

  // Token indices of leaves under `id`, left to right.
  std::vector<int> TokensUnder(int id) const;
  bool Dominates(int ancestor, int id) const;

  std::string ToString() const;

 private:
  std::vector<Node> nodes_;
  std::vector<int> words_;
};

// Category without function tags or indices: "NP-TMP-1" -> "NP". Labels
// starting with '-' (-NONE-, -LRB-) are returned unchanged.
std::string_view BaseLabel(std::string_view label);

// PTB bracket escapes (-LRB- etc.) map to the characters they stand for.
std::string UnescapeTreeWord(std::string_view word);

}  // namespace tempdistill

#endif  // TEMPDISTILL_PARSE_TREE_H_
