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

#ifndef SSAUDIT_TRANSFORMS_H_
#define SSAUDIT_TRANSFORMS_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssaudit/adapters.h"
#include "ssaudit/corpus.h"
#include "ssaudit/embeddings.h"
#include "ssaudit/lexsem.h"

namespace ssaudit {

enum class TransformSource { kWordNet, kEmbeddingKnn, kMlmInfill, kMlmReconstruct };

std::string_view TransformSourceName(TransformSource source);
std::optional<TransformSource> ParseTransformSource(std::string_view name);

inline constexpr size_t kDefaultCandidateCount = 30;

struct Candidate {
  std::string word;
  double score = 0.0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Ranked replacement proposals for one position: lower-cased, never the
// original word, at most k entries, descending by score for scored
// sources.
struct CandidateSet {
  size_t position = 0;
  TransformSource source = TransformSource::kWordNet;
  std::vector<Candidate> candidates;
  size_t k = 0;
  // Set when the embedding source did not know the word.
  bool oov = false;

  std::vector<std::string> Words() const;
};

// Union of synonyms over every sense of the word, ignoring which sense the
// context selects. Unit scores; k is the union size.
CandidateSet WordNetTransform(const Sentence& sentence, size_t i,
                              const Lexicon& lexicon);

// Nearest neighbours in the vector store, scored by cosine. OOV words give
// an empty set with the oov flag.
CandidateSet EmbeddingKnnTransform(const Sentence& sentence, size_t i,
                                   size_t k, const VectorStore& store);

// Drops pure punctuation and adapter-flagged continuation pieces.
std::vector<MlmPrediction> FilterSubwords(std::vector<MlmPrediction> ranked);

// Replaces each candidate by its lemma unless the lemma already appears in
// the raw list or was emitted earlier, in which case the candidate is kept.
std::vector<std::string> LemmaDedup(
    const std::vector<std::string>& ranked,
    const std::function<std::string(const std::string&)>& lemmatize);

// Top-k masked-LM predictions at the target, passed through FilterSubwords,
// case folding, LemmaDedup (lemmatizing under the target's tagged POS) and
// removal of the original word. An adapter that returns nothing raises
// kEmptyPrediction; transport failures surface as kAdapter.
CandidateSet MlmTransform(const MlmQuery& query, const MlmAdapter& adapter,
                          const Lexicon& lexicon);

// A transformation bound to its resources, usable by attack and audits.
using Transform = std::function<CandidateSet(const Sentence&, size_t)>;

struct TransformSpec {
  TransformSource source = TransformSource::kEmbeddingKnn;
  // Candidate count for kNN and MLM sources; WordNet ignores it.
  std::optional<size_t> k;
};

struct TransformResources {
  const Lexicon* lexicon = nullptr;
  const VectorStore* vectors = nullptr;
  const MlmAdapter* mlm = nullptr;
};

// Throws kInvalidArgument when a resource the source needs is missing.
Transform MakeTransform(const TransformSpec& spec,
                        const TransformResources& resources);

}  // namespace ssaudit

#endif  // SSAUDIT_TRANSFORMS_H_
