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

#ifndef TEMPDISTILL_DATASET_H_
#define TEMPDISTILL_DATASET_H_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tempdistill/corpus.h"
#include "tempdistill/example.h"
#include "tempdistill/masker.h"

namespace tempdistill {

// A cue span in document coordinates.
struct DocSpan {
  int sent = 0;
  int start = 0;
  int end = 0;
  CueKind kind = CueKind::kTimex;
};

// A labeled event pair in document coordinates, events in text order.
struct PairCandidate {
  int sent1 = 0;
  int token1 = 0;
  int sent2 = 0;
  int token2 = 0;
  Label label = Label::kBefore;
  // Cue spans anywhere in the document; only those inside the context are kept.
  std::vector<DocSpan> cues;
};

struct EmitCounters {
  int emitted = 0;
  int window_rejected = 0;
  int event_masked = 0;
};

// Builds one example per candidate: the context is the sentence(s) holding
// the two events, indices are remapped into it, and masking is applied when
// `apply_mask` is set. Ids hash (doc_id, sentence, e1, e2, heuristic).
std::vector<LabeledExample> EmitExamples(const Document &doc,
                                         const std::vector<PairCandidate> &candidates,
                                         Heuristic heuristic, const MaskConfig &mask,
                                         bool apply_mask, EmitCounters *counters = nullptr);

std::string ExampleId(const std::string &doc_id, int sent1, int token1, int sent2,
                      int token2, Heuristic heuristic);

// At most `per_source_cap` examples per source, chosen by a seeded reservoir;
// the result is shuffled with the same seed.
std::vector<LabeledExample> BalanceBySource(const std::vector<LabeledExample> &examples,
                                            int per_source_cap, uint64_t seed);

// Seeded uniform subsample of `size` examples, kept in input order.
std::vector<LabeledExample> Subsample(const std::vector<LabeledExample> &examples,
                                      int size, uint64_t seed);

// Splits by document: every doc_id lands entirely on one side. The train side
// receives round(train_fraction * #docs) documents.
std::pair<std::vector<LabeledExample>, std::vector<LabeledExample>> SplitByDocument(
    const std::vector<LabeledExample> &examples, double train_fraction, uint64_t seed);

// Fractions indexed by LabelIndex. Throws Error on empty input.
std::array<double, kNumLabels> LabelDistribution(const std::vector<LabeledExample> &examples);

struct RankedEvent {
  std::string word;
  double percent = 0.0;
};
struct RankedTuple {
  std::string first;
  std::string second;
  Label label = Label::kBefore;
  double percent = 0.0;
};

// Event words (lowercased surface forms) as a percentage of all event
// mentions, two per example. Ties break lexicographically.
std::vector<RankedEvent> TopEvents(const std::vector<LabeledExample> &examples, int k);
// (event1, event2, label) tuples as a percentage of examples.
std::vector<RankedTuple> TopTuples(const std::vector<LabeledExample> &examples, int k);

struct DatasetStats {
  int n = 0;
  std::array<double, kNumLabels> label_fractions{};
  std::vector<RankedEvent> top_events;
  std::vector<RankedTuple> top_tuples;
};

DatasetStats ComputeStats(const std::vector<LabeledExample> &examples, int k = 10);

}  // namespace tempdistill

#endif  // TEMPDISTILL_DATASET_H_
