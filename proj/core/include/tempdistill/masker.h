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

#ifndef TEMPDISTILL_MASKER_H_
#define TEMPDISTILL_MASKER_H_

#include <array>
#include <string>
#include <vector>

#include "tempdistill/example.h"

namespace tempdistill {

struct MaskConfig {
  std::string mask_literal = "[mask]";
  // DistantTimex: mask every timex in context, not only the anchors.
  bool mask_all_timexes = true;
  // BeforeAfter: also mask timexes, not only the connective.
  bool mask_beforeafter_timexes = false;

  // Throws Error if the literal is empty or contains whitespace.
  void Validate() const;
};

// Replaces every token of every cue span with the mask literal, one literal
// per word. Tokens, indices and label are untouched. Throws EventMasked if
// an event token lies inside a cue span.
LabeledExample MaskExample(const LabeledExample &example, const MaskConfig &config);

struct MaskStats {
  int n = 0;
  std::vector<double> ratios;  // masked tokens / tokens, per example
  double mean = 0.0;
  double max = 0.0;
  // Ratio histogram over [0, 1] in tenths; the last bin includes 1.0.
  std::array<int, 10> histogram{};
};

// Examples without masked_tokens count as ratio 0.
MaskStats ComputeMaskStats(const std::vector<LabeledExample> &examples);

}  // namespace tempdistill

#endif  // TEMPDISTILL_MASKER_H_
