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

#include "tempdistill/masker.h"

#include <algorithm>

#include "tempdistill/errors.h"

namespace tempdistill {

void MaskConfig::Validate() const {
  if (mask_literal.empty()) throw ValidationError("mask literal is empty");
  if (mask_literal.find_first_of(" \t\r\n") != std::string::npos) {
    throw ValidationError("mask literal contains whitespace");
  }
}

LabeledExample MaskExample(const LabeledExample &example, const MaskConfig &config) {
  config.Validate();
  LabeledExample out = example;
  std::vector<std::string> masked = example.tokens;
  const int n = static_cast<int>(masked.size());
  for (const CueSpan &span : example.cue_spans) {
    if (span.start < 0 || span.end > n || span.start >= span.end) {
      throw ValidationError("cue span [" + std::to_string(span.start) + ", " +
                            std::to_string(span.end) + ") out of range");
    }
    if ((example.e1 >= span.start && example.e1 < span.end) ||
        (example.e2 >= span.start && example.e2 < span.end)) {
      throw EventMasked();
    }
    for (int i = span.start; i < span.end; ++i) masked[i] = config.mask_literal;
  }
  out.masked_tokens = std::move(masked);
  return out;
}

MaskStats ComputeMaskStats(const std::vector<LabeledExample> &examples) {
  MaskStats stats;
  stats.n = static_cast<int>(examples.size());
  double sum = 0.0;
  for (const LabeledExample &ex : examples) {
    double ratio = 0.0;
    if (ex.masked_tokens && !ex.tokens.empty()) {
      int masked = 0;
      for (size_t i = 0; i < ex.tokens.size(); ++i) {
        if ((*ex.masked_tokens)[i] != ex.tokens[i]) ++masked;
      }
      ratio = static_cast<double>(masked) / static_cast<double>(ex.tokens.size());
    }
    stats.ratios.push_back(ratio);
    sum += ratio;
    stats.max = std::max(stats.max, ratio);
    const int bin = std::min(9, static_cast<int>(ratio * 10.0));
    ++stats.histogram[bin];
  }
  if (stats.n > 0) stats.mean = sum / stats.n;
  return stats;
}

}  // namespace tempdistill
