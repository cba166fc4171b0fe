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

#include "tempdistill/connective.h"

#include <deque>

#include "tempdistill/errors.h"
#include "tempdistill/util.h"

namespace tempdistill {

std::vector<int> FindConnectives(const Sentence &sentence) {
  return FindConnectives(sentence, sentence.ParsedTree());
}

std::vector<int> FindConnectives(const Sentence &sentence, const ParseTree &tree) {
  (void)sentence;
  std::vector<int> hits;
  for (int token = 0; token < tree.leaf_count(); ++token) {
    const int word = tree.word(token);
    const std::string lower = ToLower(tree.node(word).label);
    if (lower != "before" && lower != "after") continue;
    const std::string_view tag = BaseLabel(tree.node(tree.preterminal(token)).label);
    if (tag == "IN" || tag == "RB") hits.push_back(word);
  }
  return hits;
}

namespace {

bool IsVP(const ParseTree &tree, int node) {
  return !tree.IsWord(node) && BaseLabel(tree.node(node).label) == "VP";
}

int FindParentVP(const ParseTree &tree, int site) {
  for (int a = tree.node(site).parent; a >= 0; a = tree.node(a).parent) {
    if (IsVP(tree, a)) return a;
  }
  // A fronted clause ("After X, he left") hangs off the clause whose verb
  // phrase it modifies: take the nearest verb phrase beside the path.
  int on_path = site;
  for (int a = tree.node(site).parent; a >= 0; on_path = a, a = tree.node(a).parent) {
    for (int child : tree.node(a).children) {
      if (child != on_path && IsVP(tree, child)) return child;
    }
  }
  return -1;
}

int FindChildVP(const ParseTree &tree, int site, int skip) {
  std::deque<int> queue(tree.node(site).children.begin(), tree.node(site).children.end());
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    if (node == skip || tree.IsWord(node)) continue;
    if (IsVP(tree, node)) return node;
    for (int child : tree.node(node).children) queue.push_back(child);
  }
  return -1;
}

}  // namespace

ConnectiveHit ExtractPair(const Sentence &sentence, const ParseTree &tree, int conn_node,
                          int sent_index) {
  const int preterminal = tree.node(conn_node).parent;
  const int site = preterminal >= 0 ? tree.node(preterminal).parent : -1;
  if (site < 0) throw NoParentVP();

  const int parent_vp = FindParentVP(tree, site);
  if (parent_vp < 0) throw NoParentVP();
  const int child_vp = FindChildVP(tree, site, preterminal);
  if (child_vp < 0) throw NoChildVP();

  ConnectiveHit hit;
  hit.sent = sent_index;
  hit.conn_token = tree.node(conn_node).token;
  hit.conn_word = ToLower(tree.node(conn_node).label);
  try {
    hit.parent_event = HeadVerb(sentence, tree, parent_vp);
  } catch (const NoVerbFound &) {
    throw NoParentVP();
  }
  try {
    hit.child_event = HeadVerb(sentence, tree, child_vp);
  } catch (const NoVerbFound &) {
    throw NoChildVP();
  }
  if (hit.parent_event == hit.child_event) throw NoChildVP();
  return hit;
}

ConnectiveHit ExtractPair(const Sentence &sentence, int conn_node, int sent_index) {
  return ExtractPair(sentence, sentence.ParsedTree(), conn_node, sent_index);
}

OrderedPair LabelPair(const ConnectiveHit &hit) {
  const Label rel = hit.conn_word == "before" ? Label::kBefore : Label::kAfter;
  if (hit.parent_event < hit.child_event) return {hit.parent_event, hit.child_event, rel};
  return {hit.child_event, hit.parent_event, Flip(rel)};
}

BeforeAfterResult RunBeforeAfter(const Document &doc, const std::vector<TimexSpan> &timexes) {
  BeforeAfterResult result;
  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    const Sentence &sentence = doc.sentences[s];
    if (!sentence.tree) {
      for (const Token &tok : sentence.tokens) {
        const std::string lower = ToLower(tok.text);
        if ((lower == "before" || lower == "after") && (tok.pos == "IN" || tok.pos == "RB")) {
          ++result.missing_tree;
          break;
        }
      }
      continue;
    }
    const ParseTree tree = sentence.ParsedTree();
    for (int conn : FindConnectives(sentence, tree)) {
      const int token = tree.node(conn).token;
      bool inside = false;
      for (const TimexSpan &span : timexes) inside = inside || span.Contains(s, token);
      if (inside) {
        ++result.inside_timex;
        continue;
      }
      try {
        result.hits.push_back(ExtractPair(sentence, tree, conn, s));
      } catch (const NoParentVP &) {
        ++result.no_parent_vp;
      } catch (const NoChildVP &) {
        ++result.no_child_vp;
      }
    }
  }
  return result;
}

}  // namespace tempdistill
