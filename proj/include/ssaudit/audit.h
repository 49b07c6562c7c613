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

#ifndef SSAUDIT_AUDIT_H_
#define SSAUDIT_AUDIT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ssaudit/adapters.h"
#include "ssaudit/constraints.h"
#include "ssaudit/corpus.h"
#include "ssaudit/embeddings.h"
#include "ssaudit/lexsem.h"
#include "ssaudit/morphology.h"
#include "ssaudit/transforms.h"

namespace ssaudit {

enum class SubstitutionType {
  kMatched,
  kMismatched,
  kMorphological,
  kAntonym,
  kOther
};
inline constexpr size_t kSubstitutionTypeCount = 5;
inline constexpr std::array<SubstitutionType, kSubstitutionTypeCount>
    kAllSubstitutionTypes = {SubstitutionType::kMatched,
                             SubstitutionType::kMismatched,
                             SubstitutionType::kMorphological,
                             SubstitutionType::kAntonym,
                             SubstitutionType::kOther};

std::string_view SubstitutionTypeName(SubstitutionType type);
// Accepts the canonical names plus "morpheme" and "others".
std::optional<SubstitutionType> ParseSubstitutionType(std::string_view name);

// Where a swap or detector negative draws its word from: one of the four
// lexical sets or a frequency band.
enum class SwapSource {
  kMatched,
  kMismatched,
  kMorphological,
  kAntonym,
  kRandomHigh,
  kRandomLow
};

std::string_view SwapSourceName(SwapSource source);
// Accepts '_' or '-' separators and "morpheme".
std::optional<SwapSource> ParseSwapSource(std::string_view name);
// Comma-separated list; throws kInvalidArgument on unknown entries.
std::vector<SwapSource> ParseSwapSourceList(std::string_view list);
bool IsRandomSource(SwapSource source);
// The lexical set a source refers to. Random sources throw kInvalidArgument.
const std::set<std::string>& SetFor(const SubstitutionProfile& profile,
                                    SwapSource source);

// Checks membership in order morphological, matched, mismatched, antonym;
// anything else is Other. Throws kNotASubstitution when the replacement
// equals the original word (case-folded).
SubstitutionType ClassifySubstitution(const SubstitutionProfile& profile,
                                      std::string_view replacement);

// Profiles for every perturbed position of a pair, computed on the
// re-tagged original sentence.
std::vector<SubstitutionProfile> PerturbedProfiles(const AdversarialPair& pair,
                                                   const Lexicon& lexicon);

struct ClassifiedSwap {
  size_t pair_index = 0;
  size_t position = 0;
  std::string original;
  std::string replacement;
  SubstitutionType type = SubstitutionType::kOther;
  // Empty when the original word has no senses.
  std::string sense_id;
};

struct TaxonomyReport {
  size_t pairs = 0;
  size_t swaps = 0;
  // Swaps whose original word is missing from the sense inventory.
  size_t no_sense = 0;
  std::array<size_t, kSubstitutionTypeCount> counts{};
  std::vector<ClassifiedSwap> records;

  size_t Count(SubstitutionType type) const {
    return counts[static_cast<size_t>(type)];
  }
  // 0 for an empty report.
  double Fraction(SubstitutionType type) const;
  double PerPairAverage(SubstitutionType type) const;
};

// Classifies every perturbed position of every pair. jobs > 1 spreads
// pairs over threads; the report is identical for any job count.
TaxonomyReport AuditPairs(const std::vector<AdversarialPair>& pairs,
                          const Lexicon& lexicon, int jobs = 1);

struct PositionComposition {
  size_t pair_index = 0;
  size_t position = 0;
  std::string word;
  size_t candidates = 0;
  std::array<size_t, kSubstitutionTypeCount> counts{};
};

struct SkippedPosition {
  size_t pair_index = 0;
  size_t position = 0;
  std::string reason;
};

struct CompositionReport {
  // Positions whose candidate sets were classified.
  size_t positions = 0;
  // Positions the embedding source did not know; excluded from the means.
  size_t oov_positions = 0;
  size_t total_candidates = 0;
  std::array<size_t, kSubstitutionTypeCount> totals{};
  std::vector<PositionComposition> per_position;
  // Positions dropped because the transformation's adapter failed.
  std::vector<SkippedPosition> skipped;

  double Mean(SubstitutionType type) const;
  double MeanCandidates() const;
};

// Classifies every candidate proposed at every perturbed position against
// that position's profile.
CompositionReport CandidateComposition(const std::vector<AdversarialPair>& pairs,
                                       const Transform& transform,
                                       const Lexicon& lexicon, int jobs = 1);

// Rank-based average precision of positives against negatives: the mean,
// over positives in descending score order, of the precision at each
// positive's rank. Tied scores place negatives first. Throws
// kInsufficientData when either list is empty.
double Aupr(const std::vector<double>& positive_scores,
            const std::vector<double>& negative_scores);

struct DetectorConfig {
  std::vector<SwapSource> types = {SwapSource::kMismatched,
                                   SwapSource::kAntonym,
                                   SwapSource::kMorphological,
                                   SwapSource::kRandomHigh,
                                   SwapSource::kRandomLow};
  // Band words drawn per perturbed position for the random types.
  size_t random_per_position = 10;
  FrequencyBand high_band = FrequencyBand::High();
  FrequencyBand low_band = FrequencyBand::Low();
  uint64_t seed = 0;
};

struct DetectorRow {
  SwapSource type = SwapSource::kMismatched;
  // nullopt when the type produced no scores (see warnings).
  std::optional<double> aupr;
  std::vector<double> negatives;
};

struct DetectorReport {
  size_t positions = 0;
  // Perturbed words missing from the vector store.
  size_t oov_positions = 0;
  std::vector<double> positives;
  std::vector<DetectorRow> rows;
  std::vector<std::string> warnings;
};

// Word-embedding cosine detector: matched-sense words are positives, each
// requested type supplies negatives, one AUPR per type. Words missing from
// the store are skipped. Random types need a frequency table (else
// kInvalidArgument) covering their band (else kBandOutOfRange).
DetectorReport DetectorEval(const std::vector<AdversarialPair>& pairs,
                            const Lexicon& lexicon, const VectorStore& store,
                            const FrequencyTable* frequencies,
                            const DetectorConfig& cfg, int jobs = 1);

struct SeriesResources {
  const Lexicon* lexicon = nullptr;
  // Needed only for the random sources.
  const FrequencyTable* frequencies = nullptr;
  FrequencyBand high_band = FrequencyBand::High();
  FrequencyBand low_band = FrequencyBand::Low();
};

struct SwapSeries {
  Sentence original;
  SwapSource type = SwapSource::kMatched;
  // O: eligible perturbed positions in shuffled order, truncated to n_max.
  std::vector<size_t> order;
  // Word placed at order[j].
  std::vector<std::string> replacements;
  // variants[n - 1] is x_swap^n, which replaces order[0..n).
  std::vector<Sentence> variants;
  uint64_t seed = 0;
};

// The perturbed positions are shuffled once per seed; positions whose set
// of the requested type is empty are then dropped (random sources keep
// every position). Each kept position gets a seeded-random member of its
// set. Throws kEmptySeries when no position is eligible.
SwapSeries BuildSwapSeries(const AdversarialPair& pair, SwapSource type,
                           size_t n_max, uint64_t seed,
                           const SeriesResources& resources);
// Same, reusing profiles from PerturbedProfiles(pair, ...).
SwapSeries BuildSwapSeries(const AdversarialPair& pair,
                           const std::vector<SubstitutionProfile>& profiles,
                           SwapSource type, size_t n_max, uint64_t seed,
                           const SeriesResources& resources);

struct CurveConfig {
  std::vector<SwapSource> types = {SwapSource::kMatched,
                                   SwapSource::kMismatched,
                                   SwapSource::kMorphological,
                                   SwapSource::kAntonym,
                                   SwapSource::kRandomHigh,
                                   SwapSource::kRandomLow};
  size_t n_max = 10;
  // nullopt compares whole sentences.
  std::optional<size_t> window = 7;
  CompareMode compare_mode = CompareMode::kVsOriginal;
  uint64_t seed = 0;
};

struct CurvePoint {
  size_t n = 0;
  double mean = 0.0;
  // Sample standard deviation; 0 for a single sample.
  double stdev = 0.0;
  size_t samples = 0;
};

struct SensitivityCurve {
  SwapSource type = SwapSource::kMatched;
  std::vector<CurvePoint> points;
  // scores[n - 1] holds every cosine measured after n swaps.
  std::vector<std::vector<double>> scores;
  size_t series = 0;
  size_t empty_series = 0;
};

struct CurveReport {
  std::vector<SensitivityCurve> curves;
  size_t pairs_used = 0;
  // Set when an encoder call failed; curves then cover the pairs before
  // the failing one.
  bool partial = false;
  std::string error;
};

// For each pair and type, cosine between the encoded window around the
// n-th swapped position in x_swap^n and the same window of x_ori (or of
// x_swap^{n-1} in vs_previous mode), aggregated per n.
CurveReport EncoderSensitivityCurve(const std::vector<AdversarialPair>& pairs,
                                    const SentenceEncoder& encoder,
                                    const SeriesResources& resources,
                                    const CurveConfig& cfg, int jobs = 1);

struct VerbConversion {
  Sentence perturbed;
  size_t converted = 0;
  std::vector<size_t> positions;
};

// VBZ -> base form, VBD -> present participle, any other verb tag -> VBZ.
// Verbs without a distinct target form are left alone and not counted.
// Capitalization follows the original token.
VerbConversion ConvertVerbInflections(const Sentence& sentence,
                                      const Morphology& morphology);

struct StressRecord {
  size_t index = 0;
  std::string original;
  std::string perturbed;
  size_t converted = 0;
  size_t detected = 0;
};

struct GrammarStressReport {
  size_t input_sentences = 0;
  size_t used_sentences = 0;
  // Inputs the checker already flagged; excluded.
  size_t skipped_with_errors = 0;
  size_t total_converted = 0;
  size_t total_detected = 0;
  double avg_perturbed_verbs = 0.0;
  double avg_detected_errors = 0.0;
  // total_detected / total_converted; 0 when nothing was converted.
  double detection_ratio = 0.0;
  std::vector<StressRecord> records;
};

// Converts the verbs of every error-free tagged sentence and counts what
// the checker reports on the result.
GrammarStressReport GrammarStress(const std::vector<Sentence>& sentences,
                                  const Morphology& morphology,
                                  const GrammarChecker& checker, int jobs = 1);

}  // namespace ssaudit

#endif  // SSAUDIT_AUDIT_H_
