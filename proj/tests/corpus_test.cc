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

#include "ssaudit/corpus.h"

#include <cstdio>
#include <fstream>

#include "gtest/gtest.h"
#include "test_util.h"

namespace ssaudit {
namespace {

TEST(TokenizeTest, SplitsOnWhitespace) {
  Sentence s = Tokenize("I highly recommend it");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[2].surface, "recommend");
}

TEST(TokenizeTest, KeepsSeparatePunctuation) {
  EXPECT_EQ(Tokenize("it .").size(), 2u);
}

TEST(TokenizeTest, DetachesTrailingPunctuation) {
  Sentence s = Tokenize("She won.");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[1].surface, "won");
  EXPECT_EQ(s[2].surface, ".");
}

TEST(TokenizeTest, HeadlinePrefix) {
  EXPECT_EQ(Tokenize("Fears for T N pension").size(), 5u);
}

TEST(TokenizeTest, BlankTextIsEmptyInput) {
  EXPECT_ERROR_CODE(Tokenize("   "), ErrorCode::kEmptyInput);
}

TEST(SentenceTest, LowerFormsAreCaseFolded) {
  Sentence s = Tokenize("The Race is On");
  EXPECT_EQ(s[1].lower, "race");
  EXPECT_EQ(s[3].surface, "On");
  EXPECT_EQ(s.Text(), "The Race is On");
}

TEST(SentenceTest, WithReplacementChangesOneToken) {
  Sentence s = Tokenize("a b c");
  Sentence t = s.WithReplacement(1, "X");
  EXPECT_EQ(t.Text(), "a X c");
  EXPECT_EQ(t[1].lower, "x");
  EXPECT_EQ(s.Text(), "a b c");
}

TEST(SentenceTest, SliceClamps) {
  Sentence s = Tokenize("a b c d");
  EXPECT_EQ(s.Slice(1, 3).Text(), "b c");
  EXPECT_EQ(s.Slice(2, 99).Text(), "c d");
}

TEST(AlignTest, SingleDifference) {
  EXPECT_EQ(Align(Tokenize("a b c"), Tokenize("a x c")),
            std::vector<size_t>({1}));
}

TEST(AlignTest, IdenticalSentences) {
  EXPECT_TRUE(Align(Tokenize("a b c"), Tokenize("a b c")).empty());
}

TEST(AlignTest, CaseOnlyChangeIsNotASwap) {
  EXPECT_TRUE(Align(Tokenize("The race"), Tokenize("the Race")).empty());
}

TEST(AlignTest, RecommendCommend) {
  EXPECT_EQ(Align(Tokenize("recommend it"), Tokenize("commend it")),
            std::vector<size_t>({0}));
}

TEST(AlignTest, LengthMismatchThrows) {
  EXPECT_ERROR_CODE(Align(Tokenize("a b"), Tokenize("a b c")),
                    ErrorCode::kAlignment);
}

TEST(ParsePairsTest, TwoValidLines) {
  auto r = ParsePairs(
      "{\"original\": \"a b c\", \"adversarial\": \"a x c\", \"label\": 1}\n"
      "{\"original\": \"d e\", \"adversarial\": \"f e\"}\n");
  ASSERT_EQ(r.pairs.size(), 2u);
  EXPECT_TRUE(r.skipped.empty());
  EXPECT_EQ(r.pairs[0].perturbed_indices, std::vector<size_t>({1}));
  EXPECT_EQ(r.pairs[0].label, 1);
  EXPECT_FALSE(r.pairs[1].label.has_value());
}

TEST(ParsePairsTest, LengthMismatchIsSkipped) {
  auto r = ParsePairs(
      "{\"original\": \"a b c\", \"adversarial\": \"a x c\"}\n"
      "{\"original\": \"a b c\", \"adversarial\": \"a b\"}\n");
  ASSERT_EQ(r.pairs.size(), 1u);
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped[0].line, 2u);
}

TEST(ParsePairsTest, EmptyInputGivesNoPairs) {
  auto r = ParsePairs("");
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_TRUE(r.skipped.empty());
}

TEST(ParsePairsTest, MalformedJsonIsAParseError) {
  EXPECT_ERROR_CODE(ParsePairs("{not json}\n"), ErrorCode::kParse);
  EXPECT_ERROR_CODE(ParsePairs("{\"original\": \"a\"}\n"), ErrorCode::kParse);
}

TEST(ParsePairsTest, PreservesPunctuationTokens) {
  auto r = ParsePairs("{\"original\": \"it works.\", \"adversarial\": \"it runs.\"}\n");
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].original.size(), 2u);
}

TEST(LoadPairsTest, MissingFileIsIoError) {
  EXPECT_ERROR_CODE(LoadPairs("/nonexistent/pairs.jsonl"), ErrorCode::kIo);
}

TEST(LoadPairsTest, RoundTripsThroughJsonLines) {
  const std::string path = ::testing::TempDir() + "/pairs_roundtrip.jsonl";
  AdversarialPair pair = MakePair(Tokenize("I highly recommend it"),
                                  Tokenize("I highly commend it"), 1);
  {
    std::ofstream out(path);
    out << PairToJsonLine(pair) << "\n";
  }
  auto r = LoadPairs(path);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].original.Text(), "I highly recommend it");
  EXPECT_EQ(r.pairs[0].perturbed_indices, std::vector<size_t>({2}));
  EXPECT_EQ(r.pairs[0].label, 1);
  std::remove(path.c_str());
}

TEST(LoadPairsTest, BundledFixture) {
  auto r = LoadPairs(testing::FixturePath("pairs.jsonl"));
  EXPECT_EQ(r.pairs.size(), 5u);
  EXPECT_TRUE(r.skipped.empty());
}

}  // namespace
}  // namespace ssaudit
