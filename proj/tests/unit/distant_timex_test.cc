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

#include <gtest/gtest.h>

#include <algorithm>

#include "test_helpers.h"

namespace tempdistill {
namespace {

using testing::MakeDocument;
using testing::MakeSentence;

// "He finished school in 1951 . The novel was published in 1961 ."
Document TwoYears() {
  return MakeDocument(
      {MakeSentence({{"He", "PRP", "he", 1, "nsubj"},
                     {"finished", "VBD", "finish"},
                     {"school", "NN", "school", 1, "obj"},
                     {"in", "IN", "in", 4, "case"},
                     {"1951", "CD", "1951", 1, "obl"},
                     {".", ".", ".", 1, "punct"}}),
       MakeSentence({{"The", "DT", "the", 1, "det"},
                     {"novel", "NN", "novel", 3, "nsubj:pass"},
                     {"was", "VBD", "be", 3, "aux:pass"},
                     {"published", "VBN", "publish"},
                     {"in", "IN", "in", 5, "case"},
                     {"1961", "CD", "1961", 3, "obl"},
                     {".", ".", ".", 3, "punct"}})});
}

TEST(TLinkTest, CanonicalDirection) {
  const TLink a = TLink::Make("t2", "e1", TLinkRelation::kAfter, TLinkOrigin::kTimeTime);
  const TLink b = TLink::Make("e1", "t2", TLinkRelation::kBefore, TLinkOrigin::kTimeTime);
  EXPECT_EQ(a, b);
  EXPECT_EQ(Inverse(TLinkRelation::kIncludes), TLinkRelation::kIsIncluded);
  EXPECT_EQ(TLinkOriginName(TLinkOrigin::kTransitive), "transitive");
}

TEST(DetectEventsTest, SkipsAuxiliaries) {
  const auto events = DetectEvents(TwoYears());
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].eid, "e1");
  EXPECT_EQ(events[0].lemma, "finish");
  EXPECT_EQ(events[1].eid, "e2");
  EXPECT_EQ(events[1].sent, 1);
  EXPECT_EQ(events[1].token, 3);
}

TEST(AnchorEventsTest, AttachesThroughObliques) {
  const Document doc = TwoYears();
  const auto events = DetectEvents(doc);
  const auto timexes = DetectTimexes(doc);
  const auto links = AnchorEvents(doc, events, timexes);
  ASSERT_EQ(links.size(), 2u);
  EXPECT_EQ(links[0].a, "e1");
  EXPECT_EQ(links[0].b, "t1");
  EXPECT_EQ(links[0].rel, TLinkRelation::kIsIncluded);
  EXPECT_EQ(links[0].origin, TLinkOrigin::kAdjacentVerbTimex);
}

TEST(AnchorEventsTest, PathLengthLimit) {
  // The timex hangs two arcs below the verb through a noun.
  const Document doc = MakeDocument({MakeSentence({{"He", "PRP", "he", 1, "nsubj"},
                                                   {"saw", "VBD", "see"},
                                                   {"films", "NNS", "film", 1, "obj"},
                                                   {"from", "IN", "from", 4, "case"},
                                                   {"1951", "CD", "1951", 2, "nmod"}})});
  const auto events = DetectEvents(doc);
  const auto timexes = DetectTimexes(doc);
  EXPECT_EQ(AnchorEvents(doc, events, timexes).size(), 0u);
  AnchorOptions wide;
  wide.max_path_length = 1;
  EXPECT_EQ(AnchorEvents(doc, events, timexes, wide).size(), 0u);
}

TEST(AnchorEventsTest, ReportingVerbAnchorsToCreationTime) {
  const Document doc = MakeDocument({MakeSentence({{"officials", "NNS", "official", 1, "nsubj"},
                                                   {"said", "VBD", "say"}})});
  const auto events = DetectEvents(doc);
  const auto links = AnchorEvents(doc, events, {});
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].b, kDocumentTimeId);
  EXPECT_EQ(links[0].origin, TLinkOrigin::kReportingDct);
  AnchorOptions off;
  off.anchor_reporting_to_dct = false;
  EXPECT_TRUE(AnchorEvents(doc, events, {}, off).empty());
}

TEST(LinkTimexesTest, OrdersAllComparablePairs) {
  const Document doc = TwoYears();
  const auto links = LinkTimexes(doc, DetectTimexes(doc));
  const auto it = std::find_if(links.begin(), links.end(), [](const TLink &l) {
    return l.a == "t1" && l.b == "t2";
  });
  ASSERT_NE(it, links.end());
  EXPECT_EQ(it->rel, TLinkRelation::kBefore);
  EXPECT_EQ(it->origin, TLinkOrigin::kTimeTime);
}

TEST(InferEventPairsTest, YearsGiveBefore) {
  const DistantTimexResult result = RunDistantTimex(TwoYears());
  ASSERT_EQ(result.pairs.size(), 1u);
  EXPECT_EQ(result.pairs[0].first.lemma, "finish");
  EXPECT_EQ(result.pairs[0].second.lemma, "publish");
  EXPECT_EQ(result.pairs[0].label, Label::kBefore);
}

TEST(InferEventPairsTest, LaterYearFirstGivesAfter) {
  Document doc = TwoYears();
  std::swap(doc.sentences[0].tokens[4].text, doc.sentences[1].tokens[5].text);
  doc.sentences[0].tokens[4].lemma = doc.sentences[0].tokens[4].text;
  const DistantTimexResult result = RunDistantTimex(doc);
  ASSERT_EQ(result.pairs.size(), 1u);
  EXPECT_EQ(result.pairs[0].label, Label::kAfter);
}

TEST(InferEventPairsTest, SameYearGivesNoLabel) {
  Document doc = TwoYears();
  doc.sentences[1].tokens[5].text = "1951";
  EXPECT_TRUE(RunDistantTimex(doc).pairs.empty());
}

TEST(InferEventPairsTest, DistantSentencesAreNotPaired) {
  Document doc = TwoYears();
  doc.sentences.insert(doc.sentences.begin() + 1,
                       MakeSentence({{"Nothing", "NN", "nothing"}}));
  EXPECT_TRUE(RunDistantTimex(doc).pairs.empty());
}

TEST(InferEventPairsTest, SameDayGivesEqual) {
  Document doc = TwoYears();
  auto &s0 = doc.sentences[0].tokens;
  s0[4] = {4, "2000-01-05", "2000-01-05", "CD", 1, "obl"};
  auto &s1 = doc.sentences[1].tokens;
  s1[5] = {5, "2000-01-05", "2000-01-05", "CD", 3, "obl"};
  const DistantTimexResult result = RunDistantTimex(doc);
  ASSERT_EQ(result.pairs.size(), 1u);
  EXPECT_EQ(result.pairs[0].label, Label::kEqual);
}

TEST(DistantTimexTest, FixturePairs) {
  const auto docs = testing::FixtureDocuments();
  const DistantTimexResult weak_e = RunDistantTimex(testing::FixtureById(docs, "weak-e"));
  ASSERT_EQ(weak_e.pairs.size(), 1u);
  EXPECT_EQ(weak_e.pairs[0].first.lemma, "take");
  EXPECT_EQ(weak_e.pairs[0].second.lemma, "say");
  EXPECT_EQ(weak_e.pairs[0].label, Label::kBefore);
}

}  // namespace
}  // namespace tempdistill
