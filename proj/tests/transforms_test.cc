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

#include "ssaudit/transforms.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "test_util.h"

namespace ssaudit {
namespace {

using testing::FixturePath;
using testing::MiniLexicon;
using testing::Tagged;
using Words = std::vector<std::string>;

std::string VerbLemma(const std::string& w) {
  return MiniLexicon().morphology().Lemmatize(w, CoarsePos::kVerb);
}

bool Has(const Words& ws, const std::string& w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

// Mock adapter that flags "##" pieces as continuations.
FunctionMlmAdapter Returning(Words tokens) {
  return FunctionMlmAdapter([tokens](const MlmQuery&) {
    std::vector<MlmPrediction> out;
    double score = 0.0;
    for (const auto& t : tokens) {
      out.push_back({t, score -= 1.0, t.rfind("##", 0) == 0});
    }
    return out;
  });
}

TEST(TransformSourceTest, NamesRoundTrip) {
  for (auto s : {TransformSource::kWordNet, TransformSource::kEmbeddingKnn,
                 TransformSource::kMlmInfill, TransformSource::kMlmReconstruct}) {
    EXPECT_EQ(ParseTransformSource(TransformSourceName(s)), s);
  }
  EXPECT_FALSE(ParseTransformSource("bert").has_value());
}

TEST(WordNetTransformTest, UnionOfAllSenses) {
  Sentence s = Tagged("I highly recommend it");
  CandidateSet c = WordNetTransform(s, 2, MiniLexicon());
  EXPECT_EQ(c.Words(), (Words{"urge", "advocate", "commend"}));
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(c.source, TransformSource::kWordNet);
}

TEST(WordNetTransformTest, UnknownWordIsEmpty) {
  Sentence s = Tagged("the zorblax");
  EXPECT_TRUE(WordNetTransform(s, 1, MiniLexicon()).candidates.empty());
}

TEST(EmbeddingKnnTransformTest, NeighboursAndOov) {
  VectorStore store({"good", "great", "bad", "fine"},
                    {1, 0, 0.9f, 0.1f, -1, 0, 0.7f, 0.7f}, 2);
  Sentence s = Tagged("a Good day");
  CandidateSet c = EmbeddingKnnTransform(s, 1, 2, store);
  EXPECT_EQ(c.Words(), (Words{"great", "fine"}));
  EXPECT_GT(c.candidates[0].score, c.candidates[1].score);
  EXPECT_FALSE(c.oov);
  CandidateSet o = EmbeddingKnnTransform(s, 2, 2, store);
  EXPECT_TRUE(o.oov);
  EXPECT_TRUE(o.candidates.empty());
  EXPECT_ERROR_CODE(EmbeddingKnnTransform(s, 1, 0, store),
                    ErrorCode::kInvalidArgument);
}

TEST(FilterSubwordsTest, DropsPiecesAndPunctuation) {
  std::vector<MlmPrediction> in = {{"good", 0, false}, {"##s", 0, true},
                                   {",", 0, false},    {"...", 0, false},
                                   {"", 0, false},     {"it's", 0, false}};
  auto out = FilterSubwords(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].token, "good");
  EXPECT_EQ(out[1].token, "it's");
}

TEST(LemmaDedupTest, ReplacesInflectedForm) {
  EXPECT_EQ(LemmaDedup({"defines"}, VerbLemma), Words{"define"});
  EXPECT_EQ(LemmaDedup({"defines", "sets"}, VerbLemma),
            (Words{"define", "set"}));
}

TEST(LemmaDedupTest, KeepsFormWhoseLemmaIsListed) {
  EXPECT_EQ(LemmaDedup({"running", "run"}, VerbLemma),
            (Words{"running", "run"}));
  EXPECT_EQ(LemmaDedup({"sets", "set"}, VerbLemma), (Words{"sets", "set"}));
}

TEST(LemmaDedupTest, KeepsFormWhoseLemmaWasEmitted) {
  EXPECT_EQ(LemmaDedup({"ran", "runs"}, VerbLemma), (Words{"run", "runs"}));
}

TEST(LemmaDedupTest, IsIdempotent) {
  for (const Words& in : {Words{"ran", "runs", "won"},
                          Words{"defines", "defined", "define"},
                          Words{"misses", "missing", "hit"}}) {
    Words once = LemmaDedup(in, VerbLemma);
    EXPECT_EQ(LemmaDedup(once, VerbLemma), once);
    EXPECT_EQ(once.size(), in.size());
  }
}

TEST(MlmTransformTest, LemmatizesUnderTaggedPos) {
  auto mlm = Returning({"defines", "sets"});
  MlmQuery q{{"He", "fixes", "the", "rules"}, 1, true, 30};
  CandidateSet c = MlmTransform(q, mlm, MiniLexicon());
  EXPECT_EQ(c.Words(), (Words{"define", "set"}));
  EXPECT_EQ(c.source, TransformSource::kMlmInfill);
}

TEST(MlmTransformTest, DropsOriginalWordAndTruncates) {
  auto mlm = Returning({"Fixes", "sets", "##ed", "defines", "rules"});
  MlmQuery q{{"He", "fixes", "the", "rules"}, 1, false, 3};
  CandidateSet c = MlmTransform(q, mlm, MiniLexicon());
  EXPECT_EQ(c.Words(), (Words{"set"}));
  EXPECT_EQ(c.source, TransformSource::kMlmReconstruct);
  EXPECT_EQ(c.k, 3u);
}

TEST(MlmTransformTest, FiltersBeforeDedup) {
  auto mlm = Returning({"the", "##ing", ","});
  MlmQuery q{{"He", "fixes", "it"}, 1, true, 30};
  EXPECT_EQ(MlmTransform(q, mlm, MiniLexicon()).Words(), Words{"the"});
}

TEST(MlmTransformTest, EmptyPredictionIsAnError) {
  auto mlm = Returning({});
  MlmQuery q{{"He", "fixes"}, 1, true, 30};
  EXPECT_ERROR_CODE(MlmTransform(q, mlm, MiniLexicon()),
                    ErrorCode::kEmptyPrediction);
  q.target = 5;
  EXPECT_ERROR_CODE(MlmTransform(q, mlm, MiniLexicon()),
                    ErrorCode::kInvalidArgument);
}

TEST(MlmTransformTest, ReconstructionOfPrepositionDriftsAway) {
  auto mlm = TableMlmAdapter::LoadFile(FixturePath("mlm_table.json"));
  MlmQuery q{{"On", "the", "move"}, 0, false, 30};
  Words w = MlmTransform(q, *mlm, MiniLexicon()).Words();
  EXPECT_TRUE(Has(w, "around"));
  EXPECT_TRUE(Has(w, "here"));
  EXPECT_TRUE(Has(w, "ongoing"));
  EXPECT_FALSE(Has(w, "on"));
}

TEST(MakeTransformTest, BindsResources) {
  const Lexicon& lex = MiniLexicon();
  Sentence s = Tagged("I highly recommend it");
  Transform wn = MakeTransform({TransformSource::kWordNet, std::nullopt}, {&lex});
  EXPECT_EQ(wn(s, 2).candidates.size(), 3u);
  EXPECT_ERROR_CODE(MakeTransform({TransformSource::kEmbeddingKnn, 5}, {&lex}),
                    ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(MakeTransform({TransformSource::kMlmInfill, 5}, {&lex}),
                    ErrorCode::kInvalidArgument);
  auto mlm = Returning({"urge", "recommends", "push"});
  Transform infill = MakeTransform({TransformSource::kMlmInfill, 2},
                                   {&lex, nullptr, &mlm});
  EXPECT_EQ(infill(s, 2).Words(), (Words{"urge"}));
}

}  // namespace
}  // namespace ssaudit
