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

#include "tempdistill/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "tempdistill/connective.h"
#include "tempdistill/dataset.h"
#include "tempdistill/distant_timex.h"
#include "tempdistill/util.h"

namespace tempdistill {

std::optional<HeuristicSelection> ParseHeuristicSelection(std::string_view name) {
  std::string lower = ToLower(name);
  std::erase(lower, '_');
  std::erase(lower, '-');
  if (lower == "beforeafter") return HeuristicSelection::kBeforeAfter;
  if (lower == "distanttimex") return HeuristicSelection::kDistantTimex;
  if (lower == "both") return HeuristicSelection::kBoth;
  return std::nullopt;
}

std::string_view HeuristicSelectionName(HeuristicSelection selection) {
  switch (selection) {
    case HeuristicSelection::kBeforeAfter: return "beforeafter";
    case HeuristicSelection::kDistantTimex: return "distanttimex";
    case HeuristicSelection::kBoth: return "both";
  }
  return "both";
}

ExtractCounters &ExtractCounters::operator+=(const ExtractCounters &other) {
  documents += other.documents;
  beforeafter_examples += other.beforeafter_examples;
  distanttimex_examples += other.distanttimex_examples;
  missing_tree += other.missing_tree;
  no_parent_vp += other.no_parent_vp;
  no_child_vp += other.no_child_vp;
  connective_in_timex += other.connective_in_timex;
  event_masked += other.event_masked;
  window_rejected += other.window_rejected;
  duplicates_dropped += other.duplicates_dropped;
  return *this;
}

int EffectiveThreads(int requested) {
  int threads = requested > 0 ? requested
                              : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char *env = std::getenv("TEMPDISTILL_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = std::min(threads, cap);
  }
  return std::max(1, threads);
}

namespace {

using PairKey = std::tuple<int, int, int, int>;

struct Emitted {
  PairKey key;
  LabeledExample example;
};

DocSpan TimexCue(const TimexSpan &span) {
  return {span.sent, span.start, span.end, CueKind::kTimex};
}

void EmitOne(const Document &doc, const PairCandidate &candidate, Heuristic heuristic,
             const ExtractConfig &config, EmitCounters &counters, std::vector<Emitted> &out) {
  std::vector<LabeledExample> examples =
      EmitExamples(doc, {candidate}, heuristic, config.mask, config.apply_mask, &counters);
  for (LabeledExample &ex : examples) {
    out.push_back({{candidate.sent1, candidate.token1, candidate.sent2, candidate.token2},
                   std::move(ex)});
  }
}

ExtractionResult ExtractDocument(const Document &doc, const ExtractConfig &config) {
  const TimexRules &rules = config.rules != nullptr ? *config.rules : TimexRules::Default();
  const std::vector<TimexSpan> timexes = DetectTimexes(doc, rules);
  ExtractionResult result;
  result.counters.documents = 1;
  EmitCounters emit;

  std::vector<Emitted> timex_examples;
  if (config.heuristics != HeuristicSelection::kBeforeAfter) {
    DistantTimexResult dt;
    dt.events = DetectEvents(doc);
    dt.timexes = timexes;
    dt.tlinks = AnchorEvents(doc, dt.events, dt.timexes, config.anchor);
    const std::vector<TLink> time_links = LinkTimexes(doc, dt.timexes);
    dt.tlinks.insert(dt.tlinks.end(), time_links.begin(), time_links.end());
    dt.pairs = InferEventPairs(doc, dt.events, dt.timexes, dt.tlinks);

    std::map<std::string, const TimexSpan *> span_of;
    for (const TimexSpan &span : dt.timexes) span_of[span.tid] = &span;
    std::map<std::string, const TimexSpan *> anchor_span;  // eid -> anchoring timex
    for (const TLink &link : dt.tlinks) {
      if (link.origin != TLinkOrigin::kAdjacentVerbTimex) continue;
      const auto it = span_of.find(link.b);
      if (it != span_of.end()) anchor_span[link.a] = it->second;
    }

    for (const InferredPair &pair : dt.pairs) {
      PairCandidate c{pair.first.sent, pair.first.token, pair.second.sent, pair.second.token,
                      pair.label, {}};
      if (config.mask.mask_all_timexes) {
        for (const TimexSpan &span : dt.timexes) c.cues.push_back(TimexCue(span));
      } else {
        for (const std::string *eid : {&pair.first.eid, &pair.second.eid}) {
          const auto it = anchor_span.find(*eid);
          if (it != anchor_span.end()) c.cues.push_back(TimexCue(*it->second));
        }
      }
      EmitOne(doc, c, Heuristic::kDistantTimex, config, emit, timex_examples);
    }
  }

  std::vector<Emitted> connective_examples;
  if (config.heuristics != HeuristicSelection::kDistantTimex) {
    const BeforeAfterResult ba = RunBeforeAfter(doc, timexes);
    result.counters.missing_tree = ba.missing_tree;
    result.counters.no_parent_vp = ba.no_parent_vp;
    result.counters.no_child_vp = ba.no_child_vp;
    result.counters.connective_in_timex = ba.inside_timex;
    for (const ConnectiveHit &hit : ba.hits) {
      const OrderedPair ordered = LabelPair(hit);
      PairCandidate c{hit.sent, ordered.first, hit.sent, ordered.second, ordered.label, {}};
      c.cues.push_back({hit.sent, hit.conn_token, hit.conn_token + 1, CueKind::kConnective});
      if (config.mask.mask_beforeafter_timexes) {
        for (const TimexSpan &span : timexes) c.cues.push_back(TimexCue(span));
      }
      EmitOne(doc, c, Heuristic::kBeforeAfter, config, emit, connective_examples);
    }
  }

  // Merge, preferring the DistantTimex copy of a pair found by both.
  std::map<PairKey, const Emitted *> seen;
  std::vector<const Emitted *> kept;
  for (const Emitted &e : timex_examples) {
    if (seen.emplace(e.key, &e).second) kept.push_back(&e);
  }
  for (const Emitted &e : connective_examples) {
    if (seen.emplace(e.key, &e).second) {
      kept.push_back(&e);
    } else {
      ++result.counters.duplicates_dropped;
    }
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Emitted *a, const Emitted *b) {
    return a->key < b->key;
  });
  for (const Emitted *e : kept) {
    if (e->example.heuristic == Heuristic::kBeforeAfter) {
      ++result.counters.beforeafter_examples;
    } else {
      ++result.counters.distanttimex_examples;
    }
    result.examples.push_back(e->example);
  }
  result.counters.event_masked = emit.event_masked;
  result.counters.window_rejected = emit.window_rejected;
  return result;
}

}  // namespace

ExtractionResult ExtractExamples(const std::vector<Document> &docs, const ExtractConfig &config) {
  config.mask.Validate();
  std::vector<ExtractionResult> per_doc(docs.size());
  const int threads =
      std::min<int>(EffectiveThreads(config.threads), std::max<size_t>(1, docs.size()));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (size_t i = next++; i < docs.size(); i = next++) {
      try {
        per_doc[i] = ExtractDocument(docs[i], config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Documents in doc_id order; input order breaks ties between equal ids.
  std::vector<size_t> order(docs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return docs[a].doc_id < docs[b].doc_id; });
  ExtractionResult result;
  for (size_t i : order) {
    result.counters += per_doc[i].counters;
    for (LabeledExample &ex : per_doc[i].examples) result.examples.push_back(std::move(ex));
  }
  return result;
}

}  // namespace tempdistill
