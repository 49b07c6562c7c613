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
#include <unordered_set>

#include "ssaudit/error.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

std::string_view TransformSourceName(TransformSource source) {
  switch (source) {
    case TransformSource::kWordNet: return "wordnet";
    case TransformSource::kEmbeddingKnn: return "embedding_knn";
    case TransformSource::kMlmInfill: return "mlm_infill";
    case TransformSource::kMlmReconstruct: return "mlm_reconstruct";
  }
  return "wordnet";
}

std::optional<TransformSource> ParseTransformSource(std::string_view name) {
  for (TransformSource s :
       {TransformSource::kWordNet, TransformSource::kEmbeddingKnn,
        TransformSource::kMlmInfill, TransformSource::kMlmReconstruct}) {
    if (TransformSourceName(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<std::string> CandidateSet::Words() const {
  std::vector<std::string> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(c.word);
  return out;
}

CandidateSet WordNetTransform(const Sentence& sentence, size_t i,
                              const Lexicon& lexicon) {
  if (i >= sentence.size()) Fail(ErrorCode::kInvalidArgument, "index out of range");
  CandidateSet set;
  set.position = i;
  set.source = TransformSource::kWordNet;
  const std::string& word = sentence[i].lower;
  std::unordered_set<std::string> seen{word};
  for (const Sense* s : AllSenses(sentence[i], lexicon)) {
    for (const auto& syn : s->synonyms) {
      if (seen.insert(syn).second) set.candidates.push_back({syn, 1.0});
    }
  }
  set.k = set.candidates.size();
  return set;
}

CandidateSet EmbeddingKnnTransform(const Sentence& sentence, size_t i,
                                   size_t k, const VectorStore& store) {
  if (i >= sentence.size()) Fail(ErrorCode::kInvalidArgument, "index out of range");
  if (k < 1) Fail(ErrorCode::kInvalidArgument, "k must be >= 1");
  CandidateSet set;
  set.position = i;
  set.source = TransformSource::kEmbeddingKnn;
  set.k = k;
  const std::string& word = sentence[i].lower;
  if (!store.Contains(word)) {
    set.oov = true;
    return set;
  }
  for (auto& n : Knn(store, word, k)) {
    std::string w = CaseFold(n.word);
    if (w == word) continue;
    set.candidates.push_back({std::move(w), n.similarity});
  }
  return set;
}

std::vector<MlmPrediction> FilterSubwords(std::vector<MlmPrediction> ranked) {
  std::erase_if(ranked, [](const MlmPrediction& p) {
    return p.is_subword || p.token.empty() || IsPunctuation(p.token);
  });
  return ranked;
}

std::vector<std::string> LemmaDedup(
    const std::vector<std::string>& ranked,
    const std::function<std::string(const std::string&)>& lemmatize) {
  const std::unordered_set<std::string> raw(ranked.begin(), ranked.end());
  std::unordered_set<std::string> emitted;
  std::vector<std::string> out;
  out.reserve(ranked.size());
  for (const auto& w : ranked) {
    std::string lemma = lemmatize(w);
    if (!raw.count(lemma) && !emitted.count(lemma)) {
      out.push_back(lemma);
    } else {
      out.push_back(w);
    }
    emitted.insert(out.back());
  }
  return out;
}

CandidateSet MlmTransform(const MlmQuery& query, const MlmAdapter& adapter,
                          const Lexicon& lexicon) {
  if (query.target >= query.tokens.size()) {
    Fail(ErrorCode::kInvalidArgument, "MLM target out of range");
  }
  if (query.top_k < 1) Fail(ErrorCode::kInvalidArgument, "top_k must be >= 1");
  const Sentence sentence = Sentence::FromWords(query.tokens, &lexicon.tagger());
  const Token& target = sentence[query.target];

  std::vector<MlmPrediction> predictions = adapter.Predict(query);
  if (predictions.empty()) {
    Fail(ErrorCode::kEmptyPrediction,
         "adapter returned no predictions for '" + target.lower + "'");
  }
  if (predictions.size() > query.top_k) predictions.resize(query.top_k);
  predictions = FilterSubwords(std::move(predictions));

  std::vector<std::string> words;
  std::vector<double> scores;
  std::unordered_set<std::string> seen;
  for (const auto& p : predictions) {
    std::string w = CaseFold(p.token);
    if (seen.insert(w).second) {
      words.push_back(std::move(w));
      scores.push_back(p.score);
    }
  }

  const Morphology& morph = lexicon.morphology();
  const CoarsePos pos = Coarse(target.pos);
  auto lemmatize = [&](const std::string& w) {
    return pos == CoarsePos::kOther ? morph.LemmatizeAny(w)
                                    : morph.Lemmatize(w, pos);
  };
  words = LemmaDedup(words, lemmatize);

  CandidateSet set;
  set.position = query.target;
  set.source = query.masked ? TransformSource::kMlmInfill
                            : TransformSource::kMlmReconstruct;
  set.k = query.top_k;
  for (size_t j = 0; j < words.size(); ++j) {
    if (words[j] == target.lower) continue;
    set.candidates.push_back({words[j], scores[j]});
  }
  return set;
}

Transform MakeTransform(const TransformSpec& spec,
                        const TransformResources& res) {
  const size_t k = spec.k.value_or(kDefaultCandidateCount);
  switch (spec.source) {
    case TransformSource::kWordNet:
      if (!res.lexicon) Fail(ErrorCode::kInvalidArgument, "wordnet transform needs a sense inventory");
      return [lex = res.lexicon](const Sentence& s, size_t i) {
        return WordNetTransform(s, i, *lex);
      };
    case TransformSource::kEmbeddingKnn:
      if (!res.vectors) Fail(ErrorCode::kInvalidArgument, "kNN transform needs word vectors");
      return [store = res.vectors, k](const Sentence& s, size_t i) {
        return EmbeddingKnnTransform(s, i, k, *store);
      };
    case TransformSource::kMlmInfill:
    case TransformSource::kMlmReconstruct: {
      if (!res.mlm || !res.lexicon) {
        Fail(ErrorCode::kInvalidArgument, "MLM transform needs an MLM adapter and a lexicon");
      }
      const bool masked = spec.source == TransformSource::kMlmInfill;
      return [mlm = res.mlm, lex = res.lexicon, k, masked](const Sentence& s,
                                                           size_t i) {
        MlmQuery q{s.Surfaces(), i, masked, k};
        return MlmTransform(q, *mlm, *lex);
      };
    }
  }
  Fail(ErrorCode::kInvalidArgument, "unknown transform source");
}

}  // namespace ssaudit
