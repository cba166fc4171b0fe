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

#include "tempdistill/parse_tree.h"

#include <gtest/gtest.h>

#include "tempdistill/errors.h"

namespace tempdistill {
namespace {

constexpr char kTree[] =
    "(ROOT (S (NP (PRP He)) (VP (VBD left) (SBAR (IN before) (S (NP (PRP she)) "
    "(VP (VBD arrived))))) (. .)))";

TEST(ParseTreeTest, Structure) {
  const ParseTree tree = ParseTree::Parse(kTree);
  EXPECT_EQ(tree.node(tree.root()).label, "ROOT");
  EXPECT_EQ(tree.leaf_count(), 6);
  EXPECT_EQ(tree.LeafWords(), (std::vector<std::string>{"He", "left", "before", "she",
                                                        "arrived", "."}));
  const int pre = tree.preterminal(2);
  EXPECT_TRUE(tree.IsPreterminal(pre));
  EXPECT_EQ(tree.node(pre).label, "IN");
  EXPECT_TRUE(tree.IsWord(tree.word(2)));
  const int sbar = tree.node(pre).parent;
  EXPECT_EQ(tree.node(sbar).label, "SBAR");
  EXPECT_EQ(tree.TokensUnder(sbar), (std::vector<int>{2, 3, 4}));
  EXPECT_TRUE(tree.Dominates(tree.root(), sbar));
  EXPECT_FALSE(tree.Dominates(sbar, tree.root()));
}

TEST(ParseTreeTest, RoundTrip) {
  const ParseTree tree = ParseTree::Parse(kTree);
  EXPECT_EQ(ParseTree::Parse(tree.ToString()).ToString(), tree.ToString());
}

TEST(ParseTreeTest, MalformedInputs) {
  EXPECT_THROW(ParseTree::Parse("(S (NP (PRP He))"), Error);
  EXPECT_THROW(ParseTree::Parse("(S (NP he)))"), Error);
  EXPECT_THROW(ParseTree::Parse("S"), Error);
  EXPECT_THROW(ParseTree::Parse("(S (NP (PRP He)) word)"), Error);
  EXPECT_THROW(ParseTree::Parse("(S ()) "), Error);
}

TEST(ParseTreeTest, BaseLabelAndEscapes) {
  EXPECT_EQ(BaseLabel("NP-SBJ"), "NP");
  EXPECT_EQ(BaseLabel("PP-TMP=2"), "PP");
  EXPECT_EQ(BaseLabel("-NONE-"), "-NONE-");
  EXPECT_EQ(UnescapeTreeWord("-LRB-"), "(");
  EXPECT_EQ(UnescapeTreeWord("-RRB-"), ")");
  EXPECT_EQ(UnescapeTreeWord("word"), "word");
}

}  // namespace
}  // namespace tempdistill
