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

#ifndef TEMPDISTILL_PIPELINE_H_
#define TEMPDISTILL_PIPELINE_H_

#include <optional>
#include <string_view>
#include <vector>

#include "tempdistill/corpus.h"
#include "tempdistill/distant_timex.h"
#include "tempdistill/example.h"
#include "tempdistill/masker.h"
#include "tempdistill/timex.h"

namespace tempdistill {

enum class HeuristicSelection { kBeforeAfter, kDistantTimex, kBoth };

std::optional<HeuristicSelection> ParseHeuristicSelection(std::string_view name);
std::string_view HeuristicSelectionName(HeuristicSelection selection);

struct ExtractConfig {
  HeuristicSelection heuristics = HeuristicSelection::kBoth;
  MaskConfig mask;
  bool apply_mask = true;
  int threads = 1;
  const TimexRules *rules = nullptr;  // nullptr: bundled rules
  AnchorOptions anchor;
};

struct ExtractCounters {
  int documents = 0;
  int beforeafter_examples = 0;
  int distanttimex_examples = 0;
  int missing_tree = 0;
  int no_parent_vp = 0;
  int no_child_vp = 0;
  int connective_in_timex = 0;
  int event_masked = 0;
  int window_rejected = 0;
  int duplicates_dropped = 0;

  ExtractCounters &operator+=(const ExtractCounters &other);
};

struct ExtractionResult {
  std::vector<LabeledExample> examples;
  ExtractCounters counters;
};

// Runs the selected heuristics over every document. Documents are processed
// in parallel; the result is ordered by (doc_id, sentence, e1) and is
// independent of the thread count. A pair found by both heuristics keeps the
// DistantTimex copy.
ExtractionResult ExtractExamples(const std::vector<Document> &docs,
                                 const ExtractConfig &config);

// Thread count capped by TEMPDISTILL_THREADS when set.
int EffectiveThreads(int requested);

}  // namespace tempdistill

#endif  // TEMPDISTILL_PIPELINE_H_
