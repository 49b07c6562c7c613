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

#include "ssaudit/audit.h"

#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace ssaudit {
namespace {

using testing::FixturePath;
using testing::MiniLexicon;
using testing::Tagged;
using testing::TaggedPair;

const std::vector<AdversarialPair>& FixturePairs() {
  static const auto* pairs = new std::vector<AdversarialPair>(
      LoadPairs(FixturePath("pairs.jsonl"), &MiniLexicon().tagger()).pairs);
  return *pairs;
}

const VectorStore& FixtureVectors() {
  static const auto* store =
      new VectorStore(VectorStore::LoadText(FixturePath("vectors.txt")));
  return *store;
}

const FrequencyTable& FixtureFrequencies() {
  static const auto* table =
      new FrequencyTable(FrequencyTable::LoadTsv(FixturePath("freq.tsv")));
  return *table;
}

SeriesResources FixtureSeriesResources() {
  return {&MiniLexicon(), &FixtureFrequencies(), {1, 60}, {100, 200}};
}

TEST(TypeNamesTest, ParseAliases) {
  EXPECT_EQ(ParseSubstitutionType("morpheme"), SubstitutionType::kMorphological);
  EXPECT_EQ(ParseSubstitutionType("others"), SubstitutionType::kOther);
  for (auto t : kAllSubstitutionTypes) {
    EXPECT_EQ(ParseSubstitutionType(SubstitutionTypeName(t)), t);
  }
  EXPECT_EQ(ParseSwapSource("random-high"), SwapSource::kRandomHigh);
  EXPECT_EQ(ParseSwapSource("random_low"), SwapSource::kRandomLow);
  EXPECT_EQ(ParseSwapSourceList("mismatched,antonym").size(), 2u);
  EXPECT_ERROR_CODE(ParseSwapSourceList("mismatched,bogus"),
                    ErrorCode::kInvalidArgument);
  EXPECT_TRUE(IsRandomSource(SwapSource::kRandomHigh));
  EXPECT_FALSE(IsRandomSource(SwapSource::kAntonym));
}

TEST(ClassifySubstitutionTest, HandLabelledCases) {
  Sentence s = Tagged("I highly recommend it");
  SubstitutionProfile p = BuildSubstitutionProfile(s, 2, MiniLexicon());
  EXPECT_EQ(ClassifySubstitution(p, "commend"), SubstitutionType::kMatched);
  EXPECT_EQ(ClassifySubstitution(p, "urge"), SubstitutionType::kMismatched);
  EXPECT_EQ(ClassifySubstitution(p, "Advocate"), SubstitutionType::kMismatched);
  EXPECT_EQ(ClassifySubstitution(p, "recommends"),
            SubstitutionType::kMorphological);
  EXPECT_EQ(ClassifySubstitution(p, "banana"), SubstitutionType::kOther);
  EXPECT_ERROR_CODE(ClassifySubstitution(p, "Recommend"),
                    ErrorCode::kNotASubstitution);

  Sentence g = Tagged("They had a good day");
  SubstitutionProfile gp = BuildSubstitutionProfile(g, 3, MiniLexicon());
  EXPECT_EQ(ClassifySubstitution(gp, "bad"), SubstitutionType::kAntonym);
}

TEST(AuditPairsTest, FixtureCounts) {
  TaxonomyReport r = AuditPairs(FixturePairs(), MiniLexicon());
  EXPECT_EQ(r.pairs, 5u);
  EXPECT_EQ(r.swaps, 7u);
  EXPECT_EQ(r.no_sense, 1u);
  EXPECT_EQ(r.Count(SubstitutionType::kMatched), 1u);
  EXPECT_EQ(r.Count(SubstitutionType::kMismatched), 2u);
  EXPECT_EQ(r.Count(SubstitutionType::kMorphological), 2u);
  EXPECT_EQ(r.Count(SubstitutionType::kAntonym), 1u);
  EXPECT_EQ(r.Count(SubstitutionType::kOther), 1u);
  EXPECT_NEAR(r.Fraction(SubstitutionType::kMismatched), 2.0 / 7.0, 1e-12);
  EXPECT_NEAR(r.PerPairAverage(SubstitutionType::kMorphological), 0.4, 1e-12);
  ASSERT_EQ(r.records.size(), 7u);
  EXPECT_EQ(r.records[0].original, "recommend");
  EXPECT_EQ(r.records[0].sense_id, "recommend.v.02");
  EXPECT_EQ(r.records[2].original, "set");
  EXPECT_EQ(r.records[2].sense_id, "set.v.03");
  EXPECT_EQ(r.records[2].type, SubstitutionType::kMismatched);
}

TEST(AuditPairsTest, EmptyAndParallelAgree) {
  TaxonomyReport empty = AuditPairs({}, MiniLexicon());
  EXPECT_EQ(empty.swaps, 0u);
  EXPECT_EQ(empty.Fraction(SubstitutionType::kOther), 0.0);
  TaxonomyReport serial = AuditPairs(FixturePairs(), MiniLexicon(), 1);
  TaxonomyReport parallel = AuditPairs(FixturePairs(), MiniLexicon(), 4);
  EXPECT_EQ(serial.counts, parallel.counts);
  ASSERT_EQ(serial.records.size(), parallel.records.size());
  for (size_t j = 0; j < serial.records.size(); ++j) {
    EXPECT_EQ(serial.records[j].replacement, parallel.records[j].replacement);
    EXPECT_EQ(serial.records[j].type, parallel.records[j].type);
  }
}

TEST(CandidateCompositionTest, WordNetCandidatesAreNeverOther) {
  Transform wn = MakeTransform({TransformSource::kWordNet, std::nullopt},
                               {&MiniLexicon()});
  CompositionReport r = CandidateComposition(FixturePairs(), wn, MiniLexicon());
  EXPECT_EQ(r.positions, 7u);
  EXPECT_EQ(r.totals[static_cast<size_t>(SubstitutionType::kOther)], 0u);
  size_t sum = 0;
  for (size_t c : r.totals) sum += c;
  EXPECT_EQ(sum, r.total_candidates);
  EXPECT_NEAR(r.MeanCandidates(), r.total_candidates / 7.0, 1e-12);
  // recommend -> {urge, advocate, commend}.
  EXPECT_EQ(r.per_position[0].candidates, 3u);
  EXPECT_EQ(r.per_position[0].counts[static_cast<size_t>(SubstitutionType::kMatched)], 1u);
}

TEST(CandidateCompositionTest, OovAndAdapterFailures) {
  VectorStore store({"recommend", "urge"}, {1, 0, 1, 1}, 2);
  Transform knn = MakeTransform({TransformSource::kEmbeddingKnn, 5}, {nullptr, &store});
  CompositionReport r = CandidateComposition(FixturePairs(), knn, MiniLexicon());
  EXPECT_EQ(r.positions, 1u);
  EXPECT_EQ(r.oov_positions, 6u);
  EXPECT_DOUBLE_EQ(r.Mean(SubstitutionType::kMismatched), 1.0);

  FunctionMlmAdapter empty([](const MlmQuery&) { return std::vector<MlmPrediction>{}; });
  Transform mlm = MakeTransform({TransformSource::kMlmInfill, 5},
                                {&MiniLexicon(), nullptr, &empty});
  CompositionReport e = CandidateComposition(FixturePairs(), mlm, MiniLexicon());
  EXPECT_EQ(e.positions, 0u);
  EXPECT_EQ(e.skipped.size(), 7u);
  EXPECT_EQ(e.Mean(SubstitutionType::kOther), 0.0);
}

TEST(AuprTest, KnownValues) {
  EXPECT_NEAR(Aupr({0.9, 0.7}, {0.8}), (1.0 + 2.0 / 3.0) / 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(Aupr({0.9}, {0.1, 0.2}), 1.0);
  EXPECT_DOUBLE_EQ(Aupr({0.1}, {0.5, 0.9}), 1.0 / 3.0);
  // Ties rank the negative first.
  EXPECT_DOUBLE_EQ(Aupr({0.5}, {0.5}), 0.5);
}

TEST(AuprTest, Errors) {
  EXPECT_ERROR_CODE(Aupr({}, {0.1}), ErrorCode::kInsufficientData);
  EXPECT_ERROR_CODE(Aupr({0.1}, {}), ErrorCode::kInsufficientData);
  EXPECT_ERROR_CODE(Aupr({std::nan("")}, {0.1}), ErrorCode::kInvalidArgument);
}

TEST(AuprTest, MatchesRankCountingOracle) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> pos(1 + gen() % 20), neg(1 + gen() % 20);
    for (double& x : pos) x = static_cast<double>(gen() % 7) / 7.0;
    for (double& x : neg) x = static_cast<double>(gen() % 7) / 7.0;
    EXPECT_NEAR(Aupr(pos, neg), oracle::PrecisionAtRankAp(pos, neg), 1e-12);
  }
}

TEST(DetectorEvalTest, LexicalTypesMatchOracle) {
  DetectorConfig cfg;
  cfg.types = {SwapSource::kMismatched, SwapSource::kMorphological,
               SwapSource::kAntonym};
  DetectorReport r = DetectorEval(FixturePairs(), MiniLexicon(), FixtureVectors(),
                                  nullptr, cfg);
  ASSERT_EQ(r.rows.size(), 3u);
  // Independently gather the positives from the profiles.
  std::vector<double> pos;
  for (const auto& pair : FixturePairs()) {
    for (const auto& prof : PerturbedProfiles(pair, MiniLexicon())) {
      if (!FixtureVectors().Contains(prof.word)) continue;
      for (const auto& m : prof.matched) {
        if (auto c = FixtureVectors().WordCosine(prof.word, m)) pos.push_back(*c);
      }
    }
  }
  std::multiset<double> want(pos.begin(), pos.end());
  std::multiset<double> got(r.positives.begin(), r.positives.end());
  EXPECT_EQ(got, want);
  for (const auto& row : r.rows) {
    if (row.negatives.empty()) {
      EXPECT_FALSE(row.aupr.has_value());
      continue;
    }
    ASSERT_TRUE(row.aupr.has_value());
    EXPECT_NEAR(*row.aupr, oracle::PrecisionAtRankAp(r.positives, row.negatives),
                1e-12);
  }
}

TEST(DetectorEvalTest, RandomTypesAreSeededAndJobIndependent) {
  DetectorConfig cfg;
  cfg.types = {SwapSource::kRandomHigh, SwapSource::kRandomLow};
  cfg.high_band = {1, 60};
  cfg.low_band = {100, 200};
  cfg.random_per_position = 4;
  cfg.seed = 11;
  const auto& pairs = FixturePairs();
  DetectorReport a = DetectorEval(pairs, MiniLexicon(), FixtureVectors(),
                                  &FixtureFrequencies(), cfg, 1);
  DetectorReport b = DetectorEval(pairs, MiniLexicon(), FixtureVectors(),
                                  &FixtureFrequencies(), cfg, 4);
  ASSERT_EQ(a.rows.size(), 2u);
  for (size_t j = 0; j < 2; ++j) {
    EXPECT_EQ(a.rows[j].negatives, b.rows[j].negatives);
    EXPECT_EQ(a.rows[j].negatives.size(),
              4u * (a.positions - a.oov_positions));
  }
  EXPECT_ERROR_CODE(DetectorEval(pairs, MiniLexicon(), FixtureVectors(), nullptr, cfg),
                    ErrorCode::kInvalidArgument);
  cfg.low_band = {10000, 10500};
  EXPECT_ERROR_CODE(DetectorEval(pairs, MiniLexicon(), FixtureVectors(),
                                 &FixtureFrequencies(), cfg),
                    ErrorCode::kBandOutOfRange);
}

size_t Hamming(const Sentence& a, const Sentence& b) {
  return Align(a, b).size();
}

TEST(SwapSeriesTest, VariantsGrowOneSwapAtATime) {
  const AdversarialPair& pair = FixturePairs()[1];
  SeriesResources res = FixtureSeriesResources();
  for (SwapSource type : {SwapSource::kMismatched, SwapSource::kMorphological,
                          SwapSource::kRandomHigh}) {
    SwapSeries s = BuildSwapSeries(pair, type, 10, 5, res);
    ASSERT_FALSE(s.variants.empty());
    EXPECT_EQ(s.variants.size(), s.order.size());
    EXPECT_EQ(s.replacements.size(), s.order.size());
    for (size_t n = 1; n <= s.variants.size(); ++n) {
      const Sentence& v = s.variants[n - 1];
      EXPECT_EQ(Hamming(pair.original, v), n);
      EXPECT_EQ(v[s.order[n - 1]].lower, s.replacements[n - 1]);
      if (n > 1) {
        EXPECT_EQ(Hamming(s.variants[n - 2], v), 1u);
      }
    }
  }
}

TEST(SwapSeriesTest, ReplacementsComeFromTheRequestedSet) {
  const AdversarialPair& pair = FixturePairs()[1];
  auto profiles = PerturbedProfiles(pair, MiniLexicon());
  SwapSeries s = BuildSwapSeries(pair, profiles, SwapSource::kMismatched, 10, 9,
                                 FixtureSeriesResources());
  for (size_t j = 0; j < s.order.size(); ++j) {
    bool found = false;
    for (const auto& p : profiles) {
      if (p.position == s.order[j]) found = p.mismatched.count(s.replacements[j]) > 0;
    }
    EXPECT_TRUE(found) << s.replacements[j];
  }
  SwapSeries r = BuildSwapSeries(pair, profiles, SwapSource::kRandomLow, 10, 9,
                                 FixtureSeriesResources());
  for (const auto& w : r.replacements) {
    size_t rank = *FixtureFrequencies().RankOf(w);
    EXPECT_GE(rank, 100u);
    EXPECT_LT(rank, 200u);
  }
}

TEST(SwapSeriesTest, SeededAndTruncated) {
  const AdversarialPair& pair = FixturePairs()[1];
  SeriesResources res = FixtureSeriesResources();
  SwapSeries a = BuildSwapSeries(pair, SwapSource::kRandomHigh, 10, 21, res);
  SwapSeries b = BuildSwapSeries(pair, SwapSource::kRandomHigh, 10, 21, res);
  EXPECT_EQ(a.order, b.order);
  EXPECT_EQ(a.replacements, b.replacements);
  SwapSeries one = BuildSwapSeries(pair, SwapSource::kRandomHigh, 1, 21, res);
  EXPECT_EQ(one.variants.size(), 1u);
  EXPECT_EQ(one.order[0], a.order[0]);
}

TEST(SwapSeriesTest, NoEligiblePositionIsEmptySeries) {
  EXPECT_ERROR_CODE(BuildSwapSeries(FixturePairs()[0], SwapSource::kAntonym, 10,
                                    0, FixtureSeriesResources()),
                    ErrorCode::kEmptySeries);
}

TEST(EncoderCurveTest, ShapeAndDeterminism) {
  HashingBowEncoder enc(32);
  CurveConfig cfg;
  cfg.types = {SwapSource::kMorphological, SwapSource::kRandomHigh};
  cfg.n_max = 3;
  cfg.seed = 4;
  CurveReport a = EncoderSensitivityCurve(FixturePairs(), enc,
                                          FixtureSeriesResources(), cfg, 1);
  CurveReport b = EncoderSensitivityCurve(FixturePairs(), enc,
                                          FixtureSeriesResources(), cfg, 3);
  EXPECT_FALSE(a.partial);
  EXPECT_EQ(a.pairs_used, 5u);
  ASSERT_EQ(a.curves.size(), 2u);
  for (size_t c = 0; c < 2; ++c) {
    EXPECT_EQ(a.curves[c].scores, b.curves[c].scores);
    for (const auto& pt : a.curves[c].points) {
      EXPECT_LE(pt.n, 3u);
      EXPECT_EQ(pt.samples, a.curves[c].scores[pt.n - 1].size());
      EXPECT_GE(pt.mean, -1.0);
      EXPECT_LE(pt.mean, 1.0 + 1e-12);
      EXPECT_GE(pt.stdev, 0.0);
    }
  }
  // Every pair has a random-high series; one swap each.
  EXPECT_EQ(a.curves[1].series, 5u);
  EXPECT_EQ(a.curves[1].points[0].samples, 5u);
}

TEST(EncoderCurveTest, FailingEncoderYieldsPartialReport) {
  HashingBowEncoder inner(16);
  class Failing : public SentenceEncoder {
   public:
    explicit Failing(const SentenceEncoder& inner) : inner_(inner) {}
    std::vector<std::vector<double>> Encode(
        const std::vector<std::string>& texts) const override {
      for (const auto& t : texts) {
        if (t.find("company") != std::string::npos) {
          Fail(ErrorCode::kAdapter, "down");
        }
      }
      return inner_.Encode(texts);
    }

   private:
    const SentenceEncoder& inner_;
  } failing(inner);
  CurveConfig cfg;
  cfg.types = {SwapSource::kRandomHigh};
  CurveReport r = EncoderSensitivityCurve(FixturePairs(), failing,
                                          FixtureSeriesResources(), cfg, 2);
  EXPECT_TRUE(r.partial);
  EXPECT_EQ(r.pairs_used, 2u);
  EXPECT_EQ(r.curves[0].series, 2u);
  EXPECT_FALSE(r.error.empty());
}

TEST(VerbConversionTest, ThreeRules) {
  const Morphology& m = MiniLexicon().morphology();
  VerbConversion a = ConvertVerbInflections(
      Tagged("Michael Phelps won the gold medal and set a world record ."), m);
  EXPECT_EQ(a.perturbed.Text(),
            "Michael Phelps winning the gold medal and sets a world record .");
  EXPECT_EQ(a.converted, 2u);
  EXPECT_EQ(a.positions, (std::vector<size_t>{2, 7}));
  VerbConversion b =
      ConvertVerbInflections(Tagged("The company misses analysts expectations ."), m);
  EXPECT_EQ(b.perturbed.Text(), "The company miss analysts expectations .");
  EXPECT_EQ(b.converted, 1u);
}

TEST(VerbConversionTest, KeepsCaseAndSkipsNonVerbs) {
  const Morphology& m = MiniLexicon().morphology();
  VerbConversion v = ConvertVerbInflections(Tagged("Recommends the book ."), m);
  EXPECT_EQ(v.perturbed[0].surface, "Recommend");
  VerbConversion none = ConvertVerbInflections(Tagged("the good book ."), m);
  EXPECT_EQ(none.converted, 0u);
  EXPECT_EQ(none.perturbed.Text(), "the good book .");
}

TEST(GrammarStressTest, CountsAndSkips) {
  const std::set<std::string> flagged = {"winning", "miss", "recommend", "plans"};
  FunctionGrammarChecker checker([flagged](const std::string& text) {
    std::vector<GrammarError> errs;
    for (const auto& w : SplitWhitespace(text)) {
      if (flagged.count(w)) errs.push_back({0, 1, "AGR"});
    }
    return errs;
  });
  std::vector<Sentence> sentences;
  for (const char* t : {"Michael Phelps won the gold medal and set a world record .",
                        "The company misses analysts expectations .",
                        "The team plans to run a private company .",
                        "She recommends the book ."}) {
    sentences.push_back(Tagged(t));
  }
  const Morphology& m = MiniLexicon().morphology();
  GrammarStressReport r = GrammarStress(sentences, m, checker, 1);
  EXPECT_EQ(r.input_sentences, 4u);
  EXPECT_EQ(r.used_sentences, 3u);
  EXPECT_EQ(r.skipped_with_errors, 1u);
  EXPECT_EQ(r.total_converted, 4u);
  EXPECT_EQ(r.total_detected, 3u);
  EXPECT_DOUBLE_EQ(r.detection_ratio, 0.75);
  EXPECT_NEAR(r.avg_perturbed_verbs, 4.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.avg_detected_errors, 1.0);
  GrammarStressReport p = GrammarStress(sentences, m, checker, 4);
  EXPECT_EQ(p.total_detected, r.total_detected);
  ASSERT_EQ(p.records.size(), r.records.size());
  for (size_t j = 0; j < r.records.size(); ++j) {
    EXPECT_EQ(p.records[j].perturbed, r.records[j].perturbed);
  }
}

}  // namespace
}  // namespace ssaudit
