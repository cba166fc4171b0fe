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

#include "tempdistill/timex.h"

#include <gtest/gtest.h>

#include "tempdistill/errors.h"
#include "test_helpers.h"

namespace tempdistill {
namespace {

using testing::MakeDocument;
using testing::MakeSentence;

std::vector<TimexSpan> Detect(const std::vector<testing::TokenSpec> &tokens,
                              std::optional<CivilDate> dct = std::nullopt) {
  return DetectTimexes(MakeDocument({MakeSentence(tokens)}, dct));
}

TEST(TimexRulesTest, BundledRulesMatchDataFile) {
  const TimexRules &bundled = TimexRules::Default();
  const TimexRules loaded = TimexRules::Load(testing::DataDir() / "timex_rules.txt");
  EXPECT_EQ(bundled.version(), 1);
  EXPECT_EQ(bundled.size(), loaded.size());
  EXPECT_GT(bundled.size(), 20);
}

TEST(TimexRulesTest, ParsesArrowsAndComments) {
  const TimexRules rules = TimexRules::Parse(
      "# comment\nversion 1\n<YEAR> -> DATE, y($1)  # trailing\nsoon → DATE, future\n");
  ASSERT_EQ(rules.size(), 2);
  EXPECT_EQ(rules.rules()[0].normalization.kind, TimexRules::Template::Kind::kYear);
  EXPECT_EQ(rules.rules()[1].pattern[0].word, "soon");
  EXPECT_EQ(rules.rules()[1].line, 4);
}

TEST(TimexRulesTest, RejectsMalformedRules) {
  EXPECT_THROW(TimexRules::Parse("<YEAR> -> DATE, y($1)\n"), ParseError);  // no version
  EXPECT_THROW(TimexRules::Parse("version 1\n<YEAR> -> DATE, y($2)\n"), ParseError);
  EXPECT_THROW(TimexRules::Parse("version 1\n<MONTH> -> DATE, y($1)\n"), ParseError);
  EXPECT_THROW(TimexRules::Parse("version 1\n<FOO> -> DATE, unresolved\n"), ParseError);
  EXPECT_THROW(TimexRules::Parse("version 1\nnow -> INSTANT, present\n"), ParseError);
  EXPECT_THROW(TimexRules::Parse("version 1\nnow present\n"), ParseError);
  try {
    TimexRules::Parse("version 1\nnow -> DATE, present\nthen -> DATE, bogus\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(TimexDetectTest, Year) {
  const auto spans = Detect({{"in", "IN"}, {"1951", "CD"}});
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].tid, "t1");
  EXPECT_EQ(spans[0].start, 1);
  EXPECT_EQ(spans[0].end, 2);
  EXPECT_EQ(spans[0].value, NormalizedTime::Calendar({1951, 0, 0}));
}

TEST(TimexDetectTest, LongestMatchWins) {
  const auto spans =
      Detect({{"on", "IN"}, {"March", "NNP"}, {"4", "CD"}, {",", ","}, {"1951", "CD"}});
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].start, 1);
  EXPECT_EQ(spans[0].end, 5);
  EXPECT_EQ(spans[0].value.ToString(), NormalizedTime::Calendar({1951, 3, 4}).ToString());
  EXPECT_TRUE(spans[0].value.IsDayResolution());
}

TEST(TimexDetectTest, InvalidDateFallsBackToShorterRule) {
  const auto spans = Detect({{"February", "NNP"}, {"30", "CD"}, {"2001", "CD"}});
  ASSERT_FALSE(spans.empty());
  for (const TimexSpan &s : spans) {
    ASSERT_TRUE(s.value.calendar.has_value() || s.value.kind == TimeKind::kUnresolved);
    if (s.value.calendar) EXPECT_TRUE(s.value.calendar->IsValid());
  }
}

TEST(TimexDetectTest, MonthNeedsCapitalizedNoun) {
  EXPECT_TRUE(Detect({{"you", "PRP"}, {"may", "MD"}, {"go", "VB"}}).empty());
  EXPECT_EQ(Detect({{"in", "IN"}, {"May", "NNP"}}).size(), 1u);
}

TEST(TimexDetectTest, RelativeWithAndWithoutCreationTime) {
  const auto with_dct = Detect({{"yesterday", "NN"}}, CivilDate{2000, 3, 1});
  ASSERT_EQ(with_dct.size(), 1u);
  EXPECT_EQ(with_dct[0].value, NormalizedTime::Calendar({2000, 2, 29}));
  const auto without = Detect({{"yesterday", "NN"}});
  ASSERT_EQ(without.size(), 1u);
  EXPECT_EQ(without[0].value.kind, TimeKind::kPastRef);
  EXPECT_EQ(Detect({{"tomorrow", "NN"}})[0].value.kind, TimeKind::kFutureRef);
  EXPECT_EQ(Detect({{"today", "NN"}})[0].value.kind, TimeKind::kPresentRef);
}

TEST(TimexDetectTest, MultiTokenPhrases) {
  const auto spans = Detect({{"over", "IN"}, {"the", "DT"}, {"past", "JJ"}, {"six", "CD"},
                             {"years", "NNS"}});
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].start, 1);
  EXPECT_EQ(spans[0].end, 5);
  EXPECT_EQ(spans[0].ttype, TimexType::kDuration);
  EXPECT_EQ(spans[0].value.kind, TimeKind::kUnresolved);
}

TEST(TimexDetectTest, WeekdayUsesTense) {
  // 2000-03-01 is a Wednesday.
  const CivilDate dct{2000, 3, 1};
  const auto past = Detect({{"He", "PRP"}, {"left", "VBD"}, {"on", "IN"}, {"Monday", "NNP"}}, dct);
  ASSERT_EQ(past.size(), 1u);
  EXPECT_EQ(past[0].value, NormalizedTime::Calendar({2000, 2, 28}));
  const auto future = Detect(
      {{"He", "PRP"}, {"will", "MD"}, {"leave", "VB"}, {"on", "IN"}, {"Monday", "NNP"}}, dct);
  ASSERT_EQ(future.size(), 1u);
  EXPECT_EQ(future[0].value, NormalizedTime::Calendar({2000, 3, 6}));
  const auto none = Detect({{"Monday", "NNP"}}, dct);
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0].value.kind, TimeKind::kUnresolved);
}

TEST(TimexDetectTest, IsoAndSlash) {
  const auto iso = Detect({{"2013-05-07", "CD"}});
  ASSERT_EQ(iso.size(), 1u);
  EXPECT_EQ(iso[0].value, NormalizedTime::Calendar({2013, 5, 7}));
  const auto slash = Detect({{"5/7/2013", "CD"}});
  ASSERT_EQ(slash.size(), 1u);
  EXPECT_EQ(slash[0].value, NormalizedTime::Calendar({2013, 5, 7}));
}

TEST(CompareTimesTest, CalendarGranularities) {
  const auto y1951 = NormalizedTime::Calendar({1951, 0, 0});
  const auto y1961 = NormalizedTime::Calendar({1961, 0, 0});
  const auto mar1951 = NormalizedTime::Calendar({1951, 3, 0});
  const auto mar4 = NormalizedTime::Calendar({1951, 3, 4});
  EXPECT_EQ(CompareTimes(y1951, y1961, std::nullopt), TimeRelation::kBefore);
  EXPECT_EQ(CompareTimes(y1961, y1951, std::nullopt), TimeRelation::kAfter);
  EXPECT_EQ(CompareTimes(y1951, mar1951, std::nullopt), TimeRelation::kIncomparable);
  EXPECT_EQ(CompareTimes(mar4, mar4, std::nullopt), TimeRelation::kEqual);
  // Identical intervals compare equal; event pairs additionally require day
  // resolution before an EQUAL label is emitted.
  EXPECT_EQ(CompareTimes(y1951, y1951, std::nullopt), TimeRelation::kEqual);
}

TEST(CompareTimesTest, ReferenceWords) {
  const auto past = NormalizedTime::Past();
  const auto present = NormalizedTime::Present();
  const auto future = NormalizedTime::Future();
  EXPECT_EQ(CompareTimes(past, present, std::nullopt), TimeRelation::kBefore);
  EXPECT_EQ(CompareTimes(future, present, std::nullopt), TimeRelation::kAfter);
  EXPECT_EQ(CompareTimes(past, future, std::nullopt), TimeRelation::kBefore);
  EXPECT_EQ(CompareTimes(past, past, std::nullopt), TimeRelation::kIncomparable);
  EXPECT_EQ(CompareTimes(NormalizedTime::Unresolved(), present, std::nullopt),
            TimeRelation::kIncomparable);
  // With a creation time, references become intervals around it.
  const CivilDate dct{2000, 3, 1};
  EXPECT_EQ(CompareTimes(NormalizedTime::Calendar({1999, 0, 0}), present, dct),
            TimeRelation::kBefore);
  EXPECT_EQ(CompareTimes(NormalizedTime::Calendar({2000, 0, 0}), present, dct),
            TimeRelation::kIncomparable);
  EXPECT_EQ(CompareTimes(NormalizedTime::Calendar({2000, 3, 1}), present, dct),
            TimeRelation::kEqual);
}

TEST(IntervalTest, Bounds) {
  const auto year = IntervalOf(NormalizedTime::Calendar({2000, 0, 0}), std::nullopt);
  ASSERT_TRUE(year.has_value());
  EXPECT_EQ(year->last - year->first, 365);
  EXPECT_TRUE(year->bounded());
  EXPECT_FALSE(IntervalOf(NormalizedTime::Unresolved(), std::nullopt).has_value());
  const auto past = IntervalOf(NormalizedTime::Past(), CivilDate{2000, 3, 1});
  ASSERT_TRUE(past.has_value());
  EXPECT_FALSE(past->bounded());
  EXPECT_EQ(CompareIntervals({1, 2}, {3, 4}), TimeRelation::kBefore);
  EXPECT_EQ(CompareIntervals({3, 4}, {1, 2}), TimeRelation::kAfter);
  EXPECT_EQ(CompareIntervals({1, 3}, {3, 4}), TimeRelation::kIncomparable);
  EXPECT_EQ(CompareIntervals({5, 5}, {5, 5}), TimeRelation::kEqual);
}

TEST(PartialDateTest, FormattingAndValidity) {
  EXPECT_EQ((PartialDate{1951, 0, 0}).ToString(), "1951");
  EXPECT_EQ((PartialDate{1951, 3, 0}).ToString(), "1951-03");
  EXPECT_EQ((PartialDate{1951, 3, 4}).ToString(), "1951-03-04");
  EXPECT_FALSE((PartialDate{2001, 2, 29}).IsValid());
  EXPECT_FALSE((PartialDate{2001, 0, 5}).IsValid());
}

}  // namespace
}  // namespace tempdistill
