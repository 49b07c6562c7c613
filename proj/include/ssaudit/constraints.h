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

#ifndef SSAUDIT_CONSTRAINTS_H_
#define SSAUDIT_CONSTRAINTS_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssaudit/adapters.h"
#include "ssaudit/corpus.h"
#include "ssaudit/embeddings.h"

namespace ssaudit {

enum class CompareMode { kVsOriginal, kVsPrevious };
enum class PosMode { kStrict, kAllowVerbNoun, kOff };
enum class GrammarMode { kNoNewErrors, kOff };

std::string_view CompareModeName(CompareMode mode);
std::optional<CompareMode> ParseCompareMode(std::string_view name);
std::string_view PosModeName(PosMode mode);
std::optional<PosMode> ParsePosMode(std::string_view name);
std::string_view GrammarModeName(GrammarMode mode);
std::optional<GrammarMode> ParseGrammarMode(std::string_view name);

struct ConstraintConfig {
  std::optional<double> word_sim_threshold;
  std::optional<double> sent_sim_threshold;
  // Half-width of the comparison window; nullopt compares whole sentences.
  std::optional<size_t> window;
  CompareMode compare_mode = CompareMode::kVsOriginal;
  PosMode pos_mode = PosMode::kOff;
  GrammarMode grammar_mode = GrammarMode::kOff;

  // Throws kInvalidArgument for thresholds outside [0, 1].
  void Validate() const;
};

inline constexpr std::string_view kWordEmbeddingConstraint = "word_embedding";
inline constexpr std::string_view kPosConstraint = "pos";
inline constexpr std::string_view kSentenceSimilarityConstraint =
    "sentence_similarity";
inline constexpr std::string_view kGrammarConstraint = "grammar";

struct ConstraintScore {
  std::string name;
  // nullopt marks a score that could not be computed (OOV word).
  std::optional<double> value;
};

struct Verdict {
  bool passed = true;
  std::vector<ConstraintScore> scores;
  std::optional<std::string> failed_constraint;

  std::optional<double> Score(std::string_view name) const;
  // Appends other's scores; adopts its failure if this verdict still passes.
  void Merge(const Verdict& other);
};

// Passes iff cosine(original, replacement) >= threshold. Replacements
// (or originals) missing from the store fail with an empty score.
Verdict WordEmbeddingConstraint(std::string_view original,
                                std::string_view replacement,
                                const VectorStore& store, double threshold);

// [max(0, i - w), min(T, i + w + 1)).
std::pair<size_t, size_t> WindowBounds(size_t length, size_t i, size_t w);
Sentence WindowExtract(const Sentence& sentence, size_t i, size_t w);

// Encodes the windowed (or whole) reference and swapped sentences and
// passes iff their cosine reaches the threshold. The caller picks the
// reference according to compare_mode.
Verdict SentenceSimilarityConstraint(const Sentence& reference,
                                     const Sentence& swapped, size_t i,
                                     const ConstraintConfig& cfg,
                                     const SentenceEncoder& encoder);

// Compares the coarse tag of token i with the tag the replacement gets
// when tagged in place.
Verdict PosConsistencyConstraint(const Sentence& sentence, size_t i,
                                 std::string_view replacement, PosMode mode,
                                 const TaggingAdapter& tagger);

// Passes iff the swap introduces no new errors.
Verdict GrammarConstraint(const Sentence& original, const Sentence& swapped,
                          const GrammarChecker& checker);

struct ConstraintResources {
  const VectorStore* vectors = nullptr;
  const SentenceEncoder* encoder = nullptr;
  const GrammarChecker* grammar = nullptr;
  const TaggingAdapter* tagger = nullptr;
};

// One proposed substitution at position i.
struct SwapProposal {
  const Sentence* original = nullptr;  // x_ori
  const Sentence* previous = nullptr;  // sentence before this step
  const Sentence* swapped = nullptr;   // previous with the replacement
  size_t position = 0;
  std::string replacement;
};

// Runs every enabled constraint in the fixed order word-embedding, POS,
// sentence-similarity, grammar, stopping at the first failure. Throws
// kInvalidArgument when an enabled constraint lacks its resource.
Verdict EvaluateConstraints(const SwapProposal& proposal,
                            const ConstraintConfig& cfg,
                            const ConstraintResources& resources);

}  // namespace ssaudit

#endif  // SSAUDIT_CONSTRAINTS_H_
