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

#ifndef SSAUDIT_ATTACK_H_
#define SSAUDIT_ATTACK_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssaudit/adapters.h"
#include "ssaudit/constraints.h"
#include "ssaudit/corpus.h"
#include "ssaudit/transforms.h"

namespace ssaudit {

struct AttackConfig {
  TransformSpec transformation;
  ConstraintConfig constraints;
  // 0 keeps every candidate the transformation proposes.
  size_t max_candidates_per_word = 0;
  std::optional<std::string> preset_name;

  // Throws kInvalidArgument when k is 0 or a threshold is out of range.
  void Validate() const;
};

struct AttackStep {
  size_t position = 0;
  std::string original_word;
  std::string replacement;
  double prob_before = 0.0;
  double prob_after = 0.0;
  int label_after = 0;
  std::vector<ConstraintScore> scores;
};

struct AttackResult {
  bool success = false;
  // Set when the victim misclassifies the input, so there is nothing to
  // attack.
  bool skipped = false;
  int original_label = 0;
  int final_label = 0;
  std::optional<Sentence> adversarial;
  std::vector<size_t> perturbed_indices;
  size_t queries = 0;
  std::vector<AttackStep> per_step_log;
};

// Counts calls and hands back the probability of one class.
class CountingVictim {
 public:
  explicit CountingVictim(const VictimClassifier& victim) : victim_(victim) {}
  VictimPrediction Classify(const std::string& text);
  size_t queries() const { return queries_; }

 private:
  const VictimClassifier& victim_;
  size_t queries_ = 0;
};

// Probability of label in a prediction; kAdapter when the label is outside
// the returned distribution.
double LabelProbability(const VictimPrediction& prediction, int label);

// Positions ordered by the drop in the true-class probability when the
// token is deleted; ties keep positional order. A single-token sentence
// gives {0} without querying.
std::vector<size_t> WordImportance(const Sentence& sentence, int true_label,
                                   CountingVictim& victim);
std::vector<size_t> WordImportance(const Sentence& sentence,
                                   const VictimClassifier& victim);

// Greedy substitution in importance order. At each position every
// candidate passing the constraints is scored by the victim; the candidate
// that flips the label (or, failing that, lowers the true-class
// probability most) is committed if it lowers that probability at all.
// Stops at the first flip. When gold_label is given and the victim already
// disagrees with it, the result is marked skipped.
AttackResult RunAttack(const Sentence& sentence, const AttackConfig& cfg,
                       const VictimClassifier& victim,
                       const Transform& transform,
                       const ConstraintResources& constraints,
                       std::optional<int> gold_label = std::nullopt);

std::vector<std::string> PresetNames();
// Throws kUnknownPreset for names outside PresetNames().
AttackConfig Preset(std::string_view name);

}  // namespace ssaudit

#endif  // SSAUDIT_ATTACK_H_
