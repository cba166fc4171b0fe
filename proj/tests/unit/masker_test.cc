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

#include <gtest/gtest.h>

#include "tempdistill/errors.h"
#include "tempdistill/util.h"

namespace tempdistill {
namespace {

LabeledExample Sample() {
  LabeledExample ex;
  ex.id = "x";
  ex.doc_id = "d";
  ex.tokens = {"He", "left", "in", "May", "2001", "before", "she", "came", "."};
  ex.e1 = 1;
  ex.e2 = 7;
  ex.cue_spans = {{3, 5, CueKind::kTimex}, {5, 6, CueKind::kConnective}};
  return ex;
}

TEST(MaskerTest, MasksEveryCueToken) {
  const LabeledExample masked = MaskExample(Sample(), MaskConfig{});
  ASSERT_TRUE(masked.masked_tokens.has_value());
  EXPECT_EQ(RenderText(*masked.masked_tokens), "He left in [mask] [mask] [mask] she came.");
  EXPECT_EQ(masked.tokens, Sample().tokens);
}

TEST(MaskerTest, CustomLiteral) {
  MaskConfig config;
  config.mask_literal = "<mask>";
  const LabeledExample masked = MaskExample(Sample(), config);
  EXPECT_EQ((*masked.masked_tokens)[3], "<mask>");
}

TEST(MaskerTest, RejectsBadInput) {
  MaskConfig empty;
  empty.mask_literal = "";
  EXPECT_THROW(empty.Validate(), ValidationError);
  LabeledExample ex = Sample();
  ex.cue_spans.push_back({1, 2, CueKind::kTimex});
  EXPECT_THROW(MaskExample(ex, MaskConfig{}), EventMasked);
  ex = Sample();
  ex.cue_spans.push_back({8, 12, CueKind::kTimex});
  EXPECT_THROW(MaskExample(ex, MaskConfig{}), ValidationError);
}

TEST(MaskerTest, Stats) {
  const LabeledExample masked = MaskExample(Sample(), MaskConfig{});
  LabeledExample plain = Sample();
  plain.cue_spans.clear();
  plain = MaskExample(plain, MaskConfig{});
  const MaskStats stats = ComputeMaskStats({masked, plain});
  EXPECT_EQ(stats.n, 2);
  ASSERT_EQ(stats.ratios.size(), 2u);
  EXPECT_DOUBLE_EQ(stats.ratios[0], 3.0 / 9.0);
  EXPECT_DOUBLE_EQ(stats.ratios[1], 0.0);
  EXPECT_DOUBLE_EQ(stats.max, 3.0 / 9.0);
  EXPECT_DOUBLE_EQ(stats.mean, 1.5 / 9.0);
  EXPECT_EQ(stats.histogram[3], 1);
  EXPECT_EQ(stats.histogram[0], 1);
  EXPECT_EQ(ComputeMaskStats({}).n, 0);
}

}  // namespace
}  // namespace tempdistill
