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

#ifndef TEMPDISTILL_CONNECTIVE_H_
#define TEMPDISTILL_CONNECTIVE_H_

#include <string>
#include <vector>

#include "tempdistill/corpus.h"
#include "tempdistill/labels.h"
#include "tempdistill/parse_tree.h"
#include "tempdistill/timex.h"

namespace tempdistill {

struct ConnectiveHit {
  int sent = 0;
  int conn_token = 0;
  std::string conn_word;  // "before" or "after"
  int parent_event = 0;
  int child_event = 0;

  friend bool operator==(const ConnectiveHit &, const ConnectiveHit &) = default;
};

// Word nodes of "before"/"after" leaves tagged IN or RB. Throws TreeMissing.
std::vector<int> FindConnectives(const Sentence &sentence);
std::vector<int> FindConnectives(const Sentence &sentence, const ParseTree &tree);

// The parent event heads the closest verb phrase above the connective's
// phrase (or, for a fronted clause, the closest verb phrase beside it); the
// child event heads the first verb phrase found breadth-first inside the
// phrase the connective introduces. Throws NoParentVP, NoChildVP.
ConnectiveHit ExtractPair(const Sentence &sentence, const ParseTree &tree,
                          int conn_node, int sent_index = 0);
ConnectiveHit ExtractPair(const Sentence &sentence, int conn_node,
                          int sent_index = 0);

struct OrderedPair {
  int first = 0;   // earlier token
  int second = 0;
  Label label = Label::kBefore;

  friend bool operator==(const OrderedPair &, const OrderedPair &) = default;
};

// (parent REL child) with REL taken from the connective, rewritten so the
// events appear in text order.
OrderedPair LabelPair(const ConnectiveHit &hit);

struct BeforeAfterResult {
  std::vector<ConnectiveHit> hits;
  int missing_tree = 0;
  int no_parent_vp = 0;
  int no_child_vp = 0;
  int inside_timex = 0;
};

// Runs the connective heuristic over every sentence. Connectives inside one
// of `timexes` ("the day after tomorrow") are dropped.
BeforeAfterResult RunBeforeAfter(const Document &doc,
                                 const std::vector<TimexSpan> &timexes);

}  // namespace tempdistill

#endif  // TEMPDISTILL_CONNECTIVE_H_
