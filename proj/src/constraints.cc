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

#include <algorithm>
#include <cmath>

#include "ssaudit/error.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

std::string_view CompareModeName(CompareMode mode) {
  return mode == CompareMode::kVsOriginal ? "vs_original" : "vs_previous";
}

std::optional<CompareMode> ParseCompareMode(std::string_view name) {
  if (name == "vs_original") return CompareMode::kVsOriginal;
  if (name == "vs_previous") return CompareMode::kVsPrevious;
  return std::nullopt;
}

std::string_view PosModeName(PosMode mode) {
  switch (mode) {
    case PosMode::kStrict: return "strict";
    case PosMode::kAllowVerbNoun: return "allow_verb_noun";
    case PosMode::kOff: return "off";
  }
  return "off";
}

std::optional<PosMode> ParsePosMode(std::string_view name) {
  for (PosMode m : {PosMode::kStrict, PosMode::kAllowVerbNoun, PosMode::kOff}) {
    if (PosModeName(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view GrammarModeName(GrammarMode mode) {
  return mode == GrammarMode::kNoNewErrors ? "no_new_errors" : "off";
}

std::optional<GrammarMode> ParseGrammarMode(std::string_view name) {
  if (name == "no_new_errors") return GrammarMode::kNoNewErrors;
  if (name == "off") return GrammarMode::kOff;
  return std::nullopt;
}

void ConstraintConfig::Validate() const {
  auto check = [](const std::optional<double>& t, const char* name) {
    if (t && !(*t >= 0.0 && *t <= 1.0)) {
      Fail(ErrorCode::kInvalidArgument,
           std::string(name) + " threshold must lie in [0, 1]");
    }
  };
  check(word_sim_threshold, "word similarity");
  check(sent_sim_threshold, "sentence similarity");
}

std::optional<double> Verdict::Score(std::string_view name) const {
  for (const auto& s : scores) {
    if (s.name == name) return s.value;
  }
  return std::nullopt;
}

void Verdict::Merge(const Verdict& other) {
  scores.insert(scores.end(), other.scores.begin(), other.scores.end());
  if (passed && !other.passed) {
    passed = false;
    failed_constraint = other.failed_constraint;
  }
}

namespace {

Verdict Single(std::string_view name, std::optional<double> score, bool pass) {
  Verdict v;
  v.scores.push_back({std::string(name), score});
  v.passed = pass;
  if (!pass) v.failed_constraint = std::string(name);
  return v;
}

}  // namespace

Verdict WordEmbeddingConstraint(std::string_view original,
                                std::string_view replacement,
                                const VectorStore& store, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "threshold must lie in [0, 1]");
  }
  auto cos = store.WordCosine(CaseFold(original), CaseFold(replacement));
  if (!cos) return Single(kWordEmbeddingConstraint, std::nullopt, false);
  return Single(kWordEmbeddingConstraint, cos, *cos >= threshold);
}

std::pair<size_t, size_t> WindowBounds(size_t length, size_t i, size_t w) {
  const size_t begin = i > w ? i - w : 0;
  const size_t end = std::min(length, i + w + 1);
  return {begin, end};
}

Sentence WindowExtract(const Sentence& sentence, size_t i, size_t w) {
  if (i >= sentence.size()) Fail(ErrorCode::kInvalidArgument, "index out of range");
  auto [b, e] = WindowBounds(sentence.size(), i, w);
  return sentence.Slice(b, e);
}

Verdict SentenceSimilarityConstraint(const Sentence& reference,
                                     const Sentence& swapped, size_t i,
                                     const ConstraintConfig& cfg,
                                     const SentenceEncoder& encoder) {
  std::string a = reference.Text();
  std::string b = swapped.Text();
  if (cfg.window) {
    a = WindowExtract(reference, i, *cfg.window).Text();
    b = WindowExtract(swapped, i, *cfg.window).Text();
  }
  auto emb = encoder.Encode({a, b});
  if (emb.size() != 2) Fail(ErrorCode::kAdapter, "encoder returned wrong count");
  double score;
  try {
    score = Cosine(std::span<const double>(emb[0]),
                   std::span<const double>(emb[1]));
  } catch (const Error& e) {
    Fail(ErrorCode::kAdapter, std::string("encoder output: ") + e.what());
  }
  const bool pass = !cfg.sent_sim_threshold || score >= *cfg.sent_sim_threshold;
  return Single(kSentenceSimilarityConstraint, score, pass);
}

Verdict PosConsistencyConstraint(const Sentence& sentence, size_t i,
                                 std::string_view replacement, PosMode mode,
                                 const TaggingAdapter& tagger) {
  if (mode == PosMode::kOff) return Single(kPosConstraint, 1.0, true);
  if (i >= sentence.size()) Fail(ErrorCode::kInvalidArgument, "index out of range");
  const CoarsePos before = Coarse(sentence[i].pos);
  const CoarsePos after =
      Coarse(sentence.WithReplacement(i, replacement, &tagger)[i].pos);
  bool pass = before == after;
  if (!pass && mode == PosMode::kAllowVerbNoun) {
    pass = (before == CoarsePos::kVerb && after == CoarsePos::kNoun) ||
           (before == CoarsePos::kNoun && after == CoarsePos::kVerb);
  }
  return Single(kPosConstraint, pass ? 1.0 : 0.0, pass);
}

Verdict GrammarConstraint(const Sentence& original, const Sentence& swapped,
                          const GrammarChecker& checker) {
  const size_t before = checker.Check(original.Text()).size();
  const size_t after = checker.Check(swapped.Text()).size();
  return Single(kGrammarConstraint,
                static_cast<double>(after) - static_cast<double>(before),
                after <= before);
}

Verdict EvaluateConstraints(const SwapProposal& p, const ConstraintConfig& cfg,
                            const ConstraintResources& res) {
  if (!p.original || !p.previous || !p.swapped) {
    Fail(ErrorCode::kInvalidArgument, "incomplete swap proposal");
  }
  Verdict verdict;
  if (cfg.word_sim_threshold) {
    if (!res.vectors) Fail(ErrorCode::kInvalidArgument, "word-embedding constraint needs vectors");
    verdict.Merge(WordEmbeddingConstraint((*p.original)[p.position].lower,
                                          p.replacement, *res.vectors,
                                          *cfg.word_sim_threshold));
    if (!verdict.passed) return verdict;
  }
  if (cfg.pos_mode != PosMode::kOff) {
    if (!res.tagger) Fail(ErrorCode::kInvalidArgument, "POS constraint needs a tagger");
    verdict.Merge(PosConsistencyConstraint(*p.previous, p.position,
                                           p.replacement, cfg.pos_mode,
                                           *res.tagger));
    if (!verdict.passed) return verdict;
  }
  if (cfg.sent_sim_threshold) {
    if (!res.encoder) Fail(ErrorCode::kInvalidArgument, "sentence constraint needs an encoder");
    const Sentence& reference = cfg.compare_mode == CompareMode::kVsOriginal
                                    ? *p.original
                                    : *p.previous;
    verdict.Merge(SentenceSimilarityConstraint(reference, *p.swapped,
                                               p.position, cfg, *res.encoder));
    if (!verdict.passed) return verdict;
  }
  if (cfg.grammar_mode == GrammarMode::kNoNewErrors) {
    if (!res.grammar) Fail(ErrorCode::kInvalidArgument, "grammar constraint needs a checker");
    verdict.Merge(GrammarConstraint(*p.original, *p.swapped, *res.grammar));
  }
  return verdict;
}

}  // namespace ssaudit
