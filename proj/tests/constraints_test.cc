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

#include "ssaudit/constraints.h"

#include <cmath>

#include "gtest/gtest.h"
#include "test_util.h"

namespace ssaudit {
namespace {

using testing::MiniLexicon;
using testing::Tagged;

// Encodes each text as (token count, 1) and records what it saw.
class RecordingEncoder : public SentenceEncoder {
 public:
  std::vector<std::vector<double>> Encode(
      const std::vector<std::string>& texts) const override {
    std::vector<std::vector<double>> out;
    for (const auto& t : texts) {
      seen.push_back(t);
      out.push_back({static_cast<double>(SplitWhitespace(t).size()), 1.0});
    }
    return out;
  }
  mutable std::vector<std::string> seen;
};

// Counts occurrences of a marker word as grammar errors.
FunctionGrammarChecker CountingChecker(std::string marker) {
  return FunctionGrammarChecker([marker](const std::string& text) {
    std::vector<GrammarError> errs;
    for (const auto& w : SplitWhitespace(text)) {
      if (w == marker) errs.push_back({0, 1, "X"});
    }
    return errs;
  });
}

using Bounds = std::pair<size_t, size_t>;

Sentence Numbered(size_t n) {
  std::vector<std::string> w;
  for (size_t i = 0; i < n; ++i) w.push_back("t" + std::to_string(i));
  return Sentence::FromWords(w);
}

TEST(ModeNamesTest, RoundTrip) {
  for (auto m : {CompareMode::kVsOriginal, CompareMode::kVsPrevious}) {
    EXPECT_EQ(ParseCompareMode(CompareModeName(m)), m);
  }
  for (auto m : {PosMode::kStrict, PosMode::kAllowVerbNoun, PosMode::kOff}) {
    EXPECT_EQ(ParsePosMode(PosModeName(m)), m);
  }
  for (auto m : {GrammarMode::kNoNewErrors, GrammarMode::kOff}) {
    EXPECT_EQ(ParseGrammarMode(GrammarModeName(m)), m);
  }
  EXPECT_FALSE(ParseCompareMode("both").has_value());
}

TEST(ConstraintConfigTest, ValidatesThresholds) {
  ConstraintConfig cfg;
  cfg.word_sim_threshold = 1.0;
  cfg.sent_sim_threshold = 0.0;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.word_sim_threshold = 1.5;
  EXPECT_ERROR_CODE(cfg.Validate(), ErrorCode::kInvalidArgument);
  cfg.word_sim_threshold = std::nan("");
  EXPECT_ERROR_CODE(cfg.Validate(), ErrorCode::kInvalidArgument);
}

TEST(WordEmbeddingConstraintTest, ThresholdAndOov) {
  VectorStore store({"good", "great", "bad"}, {1, 0, 1, 1, -1, 0}, 2);
  Verdict v = WordEmbeddingConstraint("Good", "great", store, 0.5);
  EXPECT_TRUE(v.passed);
  EXPECT_NEAR(*v.Score(kWordEmbeddingConstraint), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_FALSE(WordEmbeddingConstraint("good", "great", store, 0.8).passed);
  Verdict oov = WordEmbeddingConstraint("good", "fine", store, 0.0);
  EXPECT_FALSE(oov.passed);
  EXPECT_EQ(oov.failed_constraint, std::string(kWordEmbeddingConstraint));
  ASSERT_EQ(oov.scores.size(), 1u);
  EXPECT_FALSE(oov.scores[0].value.has_value());
  EXPECT_TRUE(WordEmbeddingConstraint("good", "good", store, 1.0).passed);
}

TEST(WindowTest, HalfOpenBounds) {
  EXPECT_EQ(WindowBounds(40, 20, 7), Bounds(13, 28));
  EXPECT_EQ(WindowBounds(40, 2, 7), Bounds(0, 10));
  EXPECT_EQ(WindowBounds(40, 38, 7), Bounds(31, 40));
  EXPECT_EQ(WindowBounds(5, 2, 0), Bounds(2, 3));
  EXPECT_EQ(WindowBounds(5, 2, 100), Bounds(0, 5));
}

TEST(WindowTest, ExtractContainsTarget) {
  Sentence s = Numbered(40);
  Sentence w = WindowExtract(s, 20, 7);
  EXPECT_EQ(w.size(), 15u);
  EXPECT_EQ(w[0].surface, "t13");
  EXPECT_EQ(w[7].surface, "t20");
  EXPECT_EQ(w[14].surface, "t27");
  EXPECT_ERROR_CODE(WindowExtract(s, 40, 7), ErrorCode::kInvalidArgument);
}

TEST(SentenceSimilarityConstraintTest, WindowedComparison) {
  Sentence a = Numbered(40);
  Sentence b = a.WithReplacement(20, "zz");
  RecordingEncoder enc;
  ConstraintConfig cfg;
  cfg.window = 7;
  cfg.sent_sim_threshold = 0.9;
  Verdict v = SentenceSimilarityConstraint(a, b, 20, cfg, enc);
  ASSERT_EQ(enc.seen.size(), 2u);
  EXPECT_EQ(SplitWhitespace(enc.seen[0]).size(), 15u);
  EXPECT_EQ(SplitWhitespace(enc.seen[1])[7], "zz");
  EXPECT_TRUE(v.passed);
  EXPECT_NEAR(*v.Score(kSentenceSimilarityConstraint), 1.0, 1e-12);
  cfg.window.reset();
  enc.seen.clear();
  SentenceSimilarityConstraint(a, b, 20, cfg, enc);
  EXPECT_EQ(SplitWhitespace(enc.seen[0]).size(), 40u);
}

TEST(SentenceSimilarityConstraintTest, ThresholdOneNeedsIdenticalEmbeddings) {
  HashingBowEncoder enc(32);
  Sentence a = Tagged("the team won the game");
  ConstraintConfig cfg;
  cfg.sent_sim_threshold = 1.0;
  EXPECT_TRUE(SentenceSimilarityConstraint(a, a, 2, cfg, enc).passed);
  EXPECT_FALSE(SentenceSimilarityConstraint(a, a.WithReplacement(2, "lost"), 2,
                                            cfg, enc).passed);
}

TEST(PosConsistencyConstraintTest, Modes) {
  const RuleTagger& tagger = MiniLexicon().tagger();
  Sentence s = Tagged("He fixes the rules");
  EXPECT_TRUE(PosConsistencyConstraint(s, 1, "sets", PosMode::kStrict, tagger).passed);
  EXPECT_FALSE(PosConsistencyConstraint(s, 1, "worker", PosMode::kStrict, tagger).passed);
  EXPECT_TRUE(PosConsistencyConstraint(s, 1, "worker", PosMode::kAllowVerbNoun, tagger).passed);
  EXPECT_FALSE(PosConsistencyConstraint(s, 1, "happy", PosMode::kAllowVerbNoun, tagger).passed);
  EXPECT_TRUE(PosConsistencyConstraint(s, 1, "happy", PosMode::kOff, tagger).passed);
}

TEST(GrammarConstraintTest, NoNewErrors) {
  auto checker = CountingChecker("ain't");
  Sentence a = Tagged("it ain't good");
  EXPECT_TRUE(GrammarConstraint(a, a.WithReplacement(2, "bad"), checker).passed);
  Verdict fixed = GrammarConstraint(a, a.WithReplacement(1, "is"), checker);
  EXPECT_TRUE(fixed.passed);
  EXPECT_DOUBLE_EQ(*fixed.Score(kGrammarConstraint), -1.0);
  Sentence c = Tagged("it is good");
  Verdict worse = GrammarConstraint(c, c.WithReplacement(1, "ain't"), checker);
  EXPECT_FALSE(worse.passed);
  EXPECT_DOUBLE_EQ(*worse.Score(kGrammarConstraint), 1.0);
}

TEST(EvaluateConstraintsTest, StopsAtFirstFailureInOrder) {
  VectorStore store({"good", "great", "bad"}, {1, 0, 1, 1, -1, 0}, 2);
  RecordingEncoder enc;
  auto checker = CountingChecker("great");
  Sentence orig = Tagged("a good movie");
  Sentence swapped = orig.WithReplacement(1, "bad");
  ConstraintConfig cfg;
  cfg.word_sim_threshold = 0.5;
  cfg.sent_sim_threshold = 0.5;
  cfg.grammar_mode = GrammarMode::kNoNewErrors;
  ConstraintResources res{&store, &enc, &checker, &MiniLexicon().tagger()};
  SwapProposal p{&orig, &orig, &swapped, 1, "bad"};
  Verdict v = EvaluateConstraints(p, cfg, res);
  EXPECT_FALSE(v.passed);
  EXPECT_EQ(v.failed_constraint, std::string(kWordEmbeddingConstraint));
  EXPECT_TRUE(enc.seen.empty());

  Sentence ok = orig.WithReplacement(1, "great");
  SwapProposal q{&orig, &orig, &ok, 1, "great"};
  Verdict g = EvaluateConstraints(q, cfg, res);
  EXPECT_FALSE(g.passed);
  EXPECT_EQ(g.failed_constraint, std::string(kGrammarConstraint));
  EXPECT_EQ(g.scores.size(), 3u);
  EXPECT_TRUE(g.Score(kSentenceSimilarityConstraint).has_value());
}

TEST(EvaluateConstraintsTest, CompareModeSelectsReference) {
  RecordingEncoder enc;
  Sentence orig = Tagged("a b c d");
  Sentence prev = orig.WithReplacement(0, "x");
  Sentence swapped = prev.WithReplacement(3, "y");
  ConstraintConfig cfg;
  cfg.sent_sim_threshold = 0.0;
  ConstraintResources res{nullptr, &enc, nullptr, nullptr};
  SwapProposal p{&orig, &prev, &swapped, 3, "y"};
  EvaluateConstraints(p, cfg, res);
  EXPECT_EQ(enc.seen[0], "a b c d");
  enc.seen.clear();
  cfg.compare_mode = CompareMode::kVsPrevious;
  EvaluateConstraints(p, cfg, res);
  EXPECT_EQ(enc.seen[0], "x b c d");
}

TEST(EvaluateConstraintsTest, MissingResourceIsInvalidArgument) {
  Sentence s = Tagged("a b");
  SwapProposal p{&s, &s, &s, 0, "a"};
  ConstraintConfig cfg;
  cfg.word_sim_threshold = 0.5;
  EXPECT_ERROR_CODE(EvaluateConstraints(p, cfg, {}), ErrorCode::kInvalidArgument);
  EXPECT_TRUE(EvaluateConstraints(p, ConstraintConfig{}, {}).passed);
}

}  // namespace
}  // namespace ssaudit
