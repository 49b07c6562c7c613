// Copyright 2026 The ssaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssaudit/tagger.h"

#include "gtest/gtest.h"
#include "test_util.h"

namespace ssaudit {
namespace {

using testing::Tagged;

TEST(TaggerTest, ThirdPersonVerbAfterNoun) {
  Sentence s = Tagged("company misses analysts");
  EXPECT_EQ(s[1].pos, Pos::kVBZ);
  EXPECT_EQ(s[1].lemma, "miss");
}

TEST(TaggerTest, PronounIsOther) {
  EXPECT_EQ(Tagged("I")[0].pos, Pos::kOther);
}

TEST(TaggerTest, BaseFormAfterTo) {
  Sentence s = Tagged("plans to run");
  EXPECT_EQ(s[2].pos, Pos::kVB);
}

TEST(TaggerTest, HeadlineVerbs) {
  Sentence s = Tagged(
      "Michael Phelps won the gold medal in the 400 individual medley and set "
      "a world record in a time of 4 minutes 8.26 seconds .");
  EXPECT_EQ(s[2].pos, Pos::kVBD);
  EXPECT_EQ(s[2].lemma, "win");
  EXPECT_EQ(s[12].surface, "set");
  EXPECT_EQ(s[12].pos, Pos::kVBP);
}

TEST(TaggerTest, AdjectiveBeforeNoun) {
  Sentence s = Tagged("They had a good day .");
  EXPECT_EQ(s[3].pos, Pos::kAdj);
  EXPECT_EQ(s[4].pos, Pos::kNoun);
}

TEST(TaggerTest, NounAfterDeterminer) {
  Sentence s = Tagged("The company misses analysts expectations .");
  EXPECT_EQ(s[1].pos, Pos::kNoun);
  EXPECT_EQ(s[5].pos, Pos::kOther);
}

TEST(TaggerTest, RecommendInContext) {
  Sentence s = Tagged("I highly recommend it");
  EXPECT_EQ(s[1].pos, Pos::kAdv);
  EXPECT_TRUE(IsVerb(s[2].pos));
  EXPECT_EQ(s[2].lemma, "recommend");
}

TEST(TaggerTest, ParticipleAfterAuxiliary) {
  Sentence s = Tagged("the team has won");
  EXPECT_EQ(s[3].pos, Pos::kVBN);
  Sentence t = Tagged("prices are rising");
  EXPECT_EQ(t[2].pos, Pos::kVBG);
}

TEST(TaggerTest, StopwordList) {
  EXPECT_TRUE(IsStopword("the"));
  EXPECT_TRUE(IsStopword("it"));
  EXPECT_FALSE(IsStopword("highly"));
}

TEST(TaggerTest, OneFiniteVerbPerClause) {
  Sentence s = Tagged("The company misses analysts expectations .");
  EXPECT_EQ(s[2].pos, Pos::kVBZ);
  EXPECT_EQ(Coarse(s[4].pos), CoarsePos::kNoun);
  Sentence t = Tagged("Phelps won the medal and set a world record .");
  EXPECT_TRUE(IsVerb(t[5].pos));
  EXPECT_EQ(Coarse(t[8].pos), CoarsePos::kNoun);
}

}  // namespace
}  // namespace ssaudit
