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

#ifndef TEMPDISTILL_DISTANT_TIMEX_H_
#define TEMPDISTILL_DISTANT_TIMEX_H_

#include <string>
#include <string_view>
#include <vector>

#include "tempdistill/corpus.h"
#include "tempdistill/labels.h"
#include "tempdistill/timex.h"

namespace tempdistill {

// Identifier of the document creation time in timex links.
inline constexpr std::string_view kDocumentTimeId = "t0";

struct EventMention {
  std::string eid;
  int sent = 0;
  int token = 0;
  std::string lemma;

  friend bool operator==(const EventMention &, const EventMention &) = default;
};

enum class TLinkRelation { kBefore, kAfter, kEqual, kIsIncluded, kIncludes };
enum class TLinkOrigin { kAdjacentVerbTimex, kReportingDct, kTimeTime, kTransitive };

std::string_view TLinkRelationName(TLinkRelation rel);
std::string_view TLinkOriginName(TLinkOrigin origin);
TLinkRelation Inverse(TLinkRelation rel);

// Stored in one canonical direction: a < b lexicographically.
struct TLink {
  std::string a;
  std::string b;
  TLinkRelation rel = TLinkRelation::kBefore;
  TLinkOrigin origin = TLinkOrigin::kTimeTime;

  // Orders the endpoints, inverting the relation if they are swapped.
  static TLink Make(std::string from, std::string to, TLinkRelation rel,
                    TLinkOrigin origin);

  friend bool operator==(const TLink &, const TLink &) = default;
};

// One mention per verb-tagged token, excluding modals and auxiliaries
// (be/have/do) attached to another verb.
std::vector<EventMention> DetectEvents(const Document &doc);

struct AnchorOptions {
  // Dependency arcs an anchoring path may use.
  int max_path_length = 2;
  // Reporting verbs (say, tell, ...) in past or present tense that found no
  // timex are anchored to the document creation time.
  bool anchor_reporting_to_dct = true;
};

// Event IS_INCLUDED timex links. The timex head is its last token; it must be
// reachable from the event by a downward dependency path of temporal,
// oblique, adverbial or case arcs. Shortest path wins, ties go to the
// leftmost timex; at most one anchor per event.
std::vector<TLink> AnchorEvents(const Document &doc,
                                const std::vector<EventMention> &events,
                                const std::vector<TimexSpan> &timexes,
                                const AnchorOptions &options = {});

// BEFORE/AFTER/EQUAL links between every comparable pair of timexes,
// including the document creation time t0.
std::vector<TLink> LinkTimexes(const Document &doc,
                               const std::vector<TimexSpan> &timexes);

struct InferredPair {
  EventMention first;   // earlier in text
  EventMention second;
  Label label = Label::kBefore;
};

// Orders anchored events through their timexes: e1 < t1 < t2 < e2 style
// transitivity. EQUAL only when both anchors denote the same single day.
// Events must be at most one sentence apart. Never yields VAGUE.
std::vector<InferredPair> InferEventPairs(const Document &doc,
                                          const std::vector<EventMention> &events,
                                          const std::vector<TimexSpan> &timexes,
                                          const std::vector<TLink> &tlinks);

struct DistantTimexResult {
  std::vector<EventMention> events;
  std::vector<TimexSpan> timexes;
  std::vector<TLink> tlinks;
  std::vector<InferredPair> pairs;
};

DistantTimexResult RunDistantTimex(const Document &doc,
                                   const TimexRules &rules = TimexRules::Default(),
                                   const AnchorOptions &options = {});

}  // namespace tempdistill

#endif  // TEMPDISTILL_DISTANT_TIMEX_H_
