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

#include "tempdistill/distant_timex.h"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "tempdistill/util.h"

namespace tempdistill {

std::string_view TLinkRelationName(TLinkRelation rel) {
  switch (rel) {
    case TLinkRelation::kBefore: return "BEFORE";
    case TLinkRelation::kAfter: return "AFTER";
    case TLinkRelation::kEqual: return "EQUAL";
    case TLinkRelation::kIsIncluded: return "IS_INCLUDED";
    case TLinkRelation::kIncludes: return "INCLUDES";
  }
  return "BEFORE";
}

std::string_view TLinkOriginName(TLinkOrigin origin) {
  switch (origin) {
    case TLinkOrigin::kAdjacentVerbTimex: return "adjacent_verb_timex";
    case TLinkOrigin::kReportingDct: return "reporting_dct";
    case TLinkOrigin::kTimeTime: return "time_time";
    case TLinkOrigin::kTransitive: return "transitive";
  }
  return "time_time";
}

TLinkRelation Inverse(TLinkRelation rel) {
  switch (rel) {
    case TLinkRelation::kBefore: return TLinkRelation::kAfter;
    case TLinkRelation::kAfter: return TLinkRelation::kBefore;
    case TLinkRelation::kEqual: return TLinkRelation::kEqual;
    case TLinkRelation::kIsIncluded: return TLinkRelation::kIncludes;
    case TLinkRelation::kIncludes: return TLinkRelation::kIsIncluded;
  }
  return rel;
}

TLink TLink::Make(std::string from, std::string to, TLinkRelation rel, TLinkOrigin origin) {
  if (to < from) {
    std::swap(from, to);
    rel = Inverse(rel);
  }
  return TLink{std::move(from), std::move(to), rel, origin};
}

namespace {

bool IsAuxiliaryArc(std::string_view label) {
  return label == "aux" || label == "aux:pass" || label == "auxpass";
}

// Arcs a temporal anchoring path may follow, compared on the label before
// any ':' subtype (obl:tmod -> obl, nmod:tmod -> nmod).
bool IsAnchorArc(std::string_view label) {
  static const std::array<std::string_view, 7> kArcs = {
      "tmod", "obl", "nmod", "pobj", "advmod", "case", "prep"};
  const std::string_view base = label.substr(0, label.find(':'));
  return std::find(kArcs.begin(), kArcs.end(), base) != kArcs.end();
}

bool IsReportingVerb(const Token &tok) {
  static const std::array<std::string_view, 6> kLemmas = {"say",   "tell",  "report",
                                                          "announce", "state", "claim"};
  if (tok.pos != "VBD" && tok.pos != "VBZ" && tok.pos != "VBP") return false;
  const std::string lemma = ToLower(tok.lemma);
  return std::find(kLemmas.begin(), kLemmas.end(), lemma) != kLemmas.end();
}

}  // namespace

std::vector<EventMention> DetectEvents(const Document &doc) {
  std::vector<EventMention> events;
  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    const Sentence &sentence = doc.sentences[s];
    for (const Token &tok : sentence.tokens) {
      if (!IsVerbTag(tok.pos)) continue;
      if (IsAuxiliaryLemma(ToLower(tok.lemma)) && IsAuxiliaryArc(tok.dep_label) && tok.dep_head &&
          IsVerbTag(sentence.tokens[*tok.dep_head].pos)) {
        continue;
      }
      events.push_back({"e" + std::to_string(events.size() + 1), s, tok.index, tok.lemma});
    }
  }
  return events;
}

std::vector<TLink> AnchorEvents(const Document &doc, const std::vector<EventMention> &events,
                                const std::vector<TimexSpan> &timexes,
                                const AnchorOptions &options) {
  std::vector<TLink> links;
  for (const EventMention &event : events) {
    const Sentence &sentence = doc.sentences[event.sent];
    const int n = sentence.size();
    std::vector<std::vector<int>> children(n);
    for (const Token &tok : sentence.tokens) {
      if (tok.dep_head && IsAnchorArc(tok.dep_label)) children[*tok.dep_head].push_back(tok.index);
    }
    // Timex index by head token within this sentence.
    std::vector<int> head_of(n, -1);
    for (int t = 0; t < static_cast<int>(timexes.size()); ++t) {
      if (timexes[t].sent == event.sent && head_of[timexes[t].head()] < 0) {
        head_of[timexes[t].head()] = t;
      }
    }

    int anchor = -1;
    std::vector<int> frontier = {event.token};
    for (int depth = 1; depth <= options.max_path_length && anchor < 0; ++depth) {
      std::vector<int> next;
      for (int node : frontier) {
        for (int child : children[node]) next.push_back(child);
      }
      for (int node : next) {
        const int t = head_of[node];
        if (t >= 0 && (anchor < 0 || t < anchor)) anchor = t;
      }
      frontier = std::move(next);
    }

    if (anchor >= 0) {
      links.push_back(TLink::Make(event.eid, timexes[anchor].tid, TLinkRelation::kIsIncluded,
                                  TLinkOrigin::kAdjacentVerbTimex));
    } else if (options.anchor_reporting_to_dct && IsReportingVerb(sentence.tokens[event.token])) {
      links.push_back(TLink::Make(event.eid, std::string(kDocumentTimeId),
                                  TLinkRelation::kIsIncluded, TLinkOrigin::kReportingDct));
    }
  }
  return links;
}

namespace {

// The creation time followed by the detected timexes.
std::vector<std::pair<std::string, NormalizedTime>> TimeValues(
    const std::vector<TimexSpan> &timexes) {
  std::vector<std::pair<std::string, NormalizedTime>> values;
  values.emplace_back(std::string(kDocumentTimeId), NormalizedTime::Present());
  for (const TimexSpan &span : timexes) values.emplace_back(span.tid, span.value);
  return values;
}

}  // namespace

std::vector<TLink> LinkTimexes(const Document &doc, const std::vector<TimexSpan> &timexes) {
  const auto values = TimeValues(timexes);
  std::vector<TLink> links;
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t j = i + 1; j < values.size(); ++j) {
      const TimeRelation rel = CompareTimes(values[i].second, values[j].second, doc.dct);
      if (rel == TimeRelation::kIncomparable) continue;
      const TLinkRelation tl = rel == TimeRelation::kBefore  ? TLinkRelation::kBefore
                               : rel == TimeRelation::kAfter ? TLinkRelation::kAfter
                                                             : TLinkRelation::kEqual;
      links.push_back(TLink::Make(values[i].first, values[j].first, tl, TLinkOrigin::kTimeTime));
    }
  }
  return links;
}

std::vector<InferredPair> InferEventPairs(const Document &doc,
                                          const std::vector<EventMention> &events,
                                          const std::vector<TimexSpan> &timexes,
                                          const std::vector<TLink> &tlinks) {
  (void)doc;
  std::map<std::string, NormalizedTime> value_of;
  for (const auto &[tid, value] : TimeValues(timexes)) value_of[tid] = value;

  std::map<std::string, std::string> anchor_of;  // eid -> tid
  std::map<std::pair<std::string, std::string>, TLinkRelation> time_rel;
  for (const TLink &link : tlinks) {
    const bool a_time = value_of.count(link.a) > 0;
    const bool b_time = value_of.count(link.b) > 0;
    if (a_time && b_time) {
      time_rel[{link.a, link.b}] = link.rel;
      time_rel[{link.b, link.a}] = Inverse(link.rel);
    } else if (link.rel == TLinkRelation::kIsIncluded && b_time) {
      anchor_of.emplace(link.a, link.b);
    } else if (link.rel == TLinkRelation::kIncludes && a_time) {
      anchor_of.emplace(link.b, link.a);
    }
  }

  std::vector<const EventMention *> anchored;
  for (const EventMention &event : events) {
    if (anchor_of.count(event.eid)) anchored.push_back(&event);
  }
  std::sort(anchored.begin(), anchored.end(), [](const EventMention *x, const EventMention *y) {
    return std::pair(x->sent, x->token) < std::pair(y->sent, y->token);
  });

  std::vector<InferredPair> pairs;
  for (size_t i = 0; i < anchored.size(); ++i) {
    for (size_t j = i + 1; j < anchored.size(); ++j) {
      const EventMention &first = *anchored[i];
      const EventMention &second = *anchored[j];
      if (second.sent - first.sent > 1) break;
      if (first.sent == second.sent && first.token == second.token) continue;
      const std::string &t1 = anchor_of.at(first.eid);
      const std::string &t2 = anchor_of.at(second.eid);
      const bool day1 = value_of.at(t1).IsDayResolution();
      const bool day2 = value_of.at(t2).IsDayResolution();
      Label label;
      if (t1 == t2) {
        if (!day1) continue;
        label = Label::kEqual;
      } else {
        const auto it = time_rel.find({t1, t2});
        if (it == time_rel.end()) continue;
        if (it->second == TLinkRelation::kBefore) {
          label = Label::kBefore;
        } else if (it->second == TLinkRelation::kAfter) {
          label = Label::kAfter;
        } else if (it->second == TLinkRelation::kEqual && day1 && day2) {
          label = Label::kEqual;
        } else {
          continue;
        }
      }
      pairs.push_back({first, second, label});
    }
  }
  return pairs;
}

DistantTimexResult RunDistantTimex(const Document &doc, const TimexRules &rules,
                                   const AnchorOptions &options) {
  DistantTimexResult result;
  result.events = DetectEvents(doc);
  result.timexes = DetectTimexes(doc, rules);
  result.tlinks = AnchorEvents(doc, result.events, result.timexes, options);
  const std::vector<TLink> time_links = LinkTimexes(doc, result.timexes);
  result.tlinks.insert(result.tlinks.end(), time_links.begin(), time_links.end());
  result.pairs = InferEventPairs(doc, result.events, result.timexes, result.tlinks);
  return result;
}

}  // namespace tempdistill
