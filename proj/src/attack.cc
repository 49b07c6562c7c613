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

#include "ssaudit/attack.h"

#include <algorithm>
#include <numeric>

#include "ssaudit/error.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

void AttackConfig::Validate() const {
  if (transformation.k && *transformation.k == 0) {
    Fail(ErrorCode::kInvalidArgument, "candidate count k must be at least 1");
  }
  constraints.Validate();
}

VictimPrediction CountingVictim::Classify(const std::string& text) {
  ++queries_;
  return victim_.Classify(text);
}

double LabelProbability(const VictimPrediction& prediction, int label) {
  if (label < 0 || static_cast<size_t>(label) >= prediction.probs.size()) {
    Fail(ErrorCode::kAdapter, "victim returned no probability for label " +
                                  std::to_string(label));
  }
  return prediction.probs[static_cast<size_t>(label)];
}

namespace {

std::string TextWithout(const Sentence& sentence, size_t skip) {
  std::vector<std::string> words;
  words.reserve(sentence.size() - 1);
  for (size_t j = 0; j < sentence.size(); ++j) {
    if (j != skip) words.push_back(sentence[j].surface);
  }
  return Join(words, " ");
}

}  // namespace

std::vector<size_t> WordImportance(const Sentence& sentence, int true_label,
                                   CountingVictim& victim) {
  std::vector<size_t> order(sentence.size());
  std::iota(order.begin(), order.end(), 0);
  if (sentence.size() == 1) return order;
  const double base =
      LabelProbability(victim.Classify(sentence.Text()), true_label);
  std::vector<double> drop(sentence.size());
  for (size_t i = 0; i < sentence.size(); ++i) {
    drop[i] = base - LabelProbability(victim.Classify(TextWithout(sentence, i)),
                                      true_label);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return drop[a] > drop[b]; });
  return order;
}

std::vector<size_t> WordImportance(const Sentence& sentence,
                                   const VictimClassifier& victim) {
  CountingVictim counting(victim);
  const int label = counting.Classify(sentence.Text()).label;
  return WordImportance(sentence, label, counting);
}

AttackResult RunAttack(const Sentence& sentence, const AttackConfig& cfg,
                       const VictimClassifier& victim,
                       const Transform& transform,
                       const ConstraintResources& constraints,
                       std::optional<int> gold_label) {
  cfg.Validate();
  CountingVictim counting(victim);
  AttackResult result;

  const VictimPrediction initial = counting.Classify(sentence.Text());
  result.original_label = initial.label;
  result.final_label = initial.label;
  if (gold_label && *gold_label != initial.label) {
    result.skipped = true;
    result.queries = counting.queries();
    return result;
  }
  const int true_label = initial.label;
  double current_prob = LabelProbability(initial, true_label);

  const std::vector<size_t> order =
      WordImportance(sentence, true_label, counting);

  Sentence current = sentence;
  for (size_t i : order) {
    CandidateSet set = transform(current, i);
    std::vector<Candidate> candidates = std::move(set.candidates);
    if (cfg.max_candidates_per_word > 0 &&
        candidates.size() > cfg.max_candidates_per_word) {
      candidates.resize(cfg.max_candidates_per_word);
    }

    struct Best {
      Sentence swapped;
      std::string word;
      double prob;
      int label;
      std::vector<ConstraintScore> scores;
    };
    std::optional<Best> best;
    for (const Candidate& c : candidates) {
      if (c.word.empty() || c.word == current[i].lower) continue;
      const std::string surface = MatchCase(current[i].surface, c.word);
      Sentence swapped = current.WithReplacement(i, surface, constraints.tagger);
      SwapProposal proposal{&sentence, &current, &swapped, i, c.word};
      Verdict verdict = EvaluateConstraints(proposal, cfg.constraints, constraints);
      if (!verdict.passed) continue;
      const VictimPrediction pred = counting.Classify(swapped.Text());
      const double prob = LabelProbability(pred, true_label);
      const bool flips = pred.label != true_label;
      bool better = !best;
      if (best) {
        const bool best_flips = best->label != true_label;
        better = flips != best_flips ? flips : prob < best->prob;
      }
      if (better) {
        best = Best{std::move(swapped), c.word, prob, pred.label,
                    std::move(verdict.scores)};
      }
    }
    if (!best) continue;
    const bool flips = best->label != true_label;
    if (!flips && !(best->prob < current_prob)) continue;

    AttackStep step;
    step.position = i;
    step.original_word = current[i].surface;
    step.replacement = best->swapped[i].surface;
    step.prob_before = current_prob;
    step.prob_after = best->prob;
    step.label_after = best->label;
    step.scores = std::move(best->scores);
    result.per_step_log.push_back(std::move(step));

    current = std::move(best->swapped);
    current_prob = best->prob;
    result.final_label = best->label;
    if (flips) {
      result.success = true;
      break;
    }
  }

  result.perturbed_indices = Align(sentence, current);
  if (result.success) result.adversarial = current;
  result.queries = counting.queries();
  return result;
}

std::vector<std::string> PresetNames() {
  return {"pwws", "textfooler", "bert_attack", "bae", "textfooler_adj", "a2t"};
}

AttackConfig Preset(std::string_view name) {
  AttackConfig cfg;
  cfg.preset_name = std::string(name);
  ConstraintConfig& c = cfg.constraints;
  if (name == "pwws") {
    cfg.transformation = {TransformSource::kWordNet, std::nullopt};
  } else if (name == "textfooler") {
    cfg.transformation = {TransformSource::kEmbeddingKnn, 50};
    c.word_sim_threshold = 0.5;
    c.sent_sim_threshold = 0.878;
    c.window = 7;
    c.compare_mode = CompareMode::kVsOriginal;
    c.pos_mode = PosMode::kAllowVerbNoun;
  } else if (name == "bert_attack") {
    cfg.transformation = {TransformSource::kMlmInfill, 48};
    c.sent_sim_threshold = 0.7;
    c.compare_mode = CompareMode::kVsOriginal;
  } else if (name == "bae") {
    cfg.transformation = {TransformSource::kMlmReconstruct, 50};
    c.sent_sim_threshold = 0.936;
    c.window = 7;
    c.compare_mode = CompareMode::kVsPrevious;
  } else if (name == "textfooler_adj") {
    cfg.transformation = {TransformSource::kEmbeddingKnn, 50};
    c.word_sim_threshold = 0.9;
    c.sent_sim_threshold = 0.98;
    c.window = 7;
    c.compare_mode = CompareMode::kVsOriginal;
    c.pos_mode = PosMode::kAllowVerbNoun;
    c.grammar_mode = GrammarMode::kNoNewErrors;
  } else if (name == "a2t") {
    cfg.transformation = {TransformSource::kEmbeddingKnn, 20};
    c.word_sim_threshold = 0.8;
    c.sent_sim_threshold = 0.9;
    c.window = 7;
    c.compare_mode = CompareMode::kVsOriginal;
    c.pos_mode = PosMode::kStrict;
  } else {
    Fail(ErrorCode::kUnknownPreset, "unknown preset '" + std::string(name) + "'");
  }
  return cfg;
}

}  // namespace ssaudit
