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

#ifndef SSAUDIT_LEXSEM_H_
#define SSAUDIT_LEXSEM_H_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssaudit/corpus.h"
#include "ssaudit/morphology.h"
#include "ssaudit/tagger.h"

namespace ssaudit {

struct Sense {
  std::string id;
  std::string lemma;
  CoarsePos pos = CoarsePos::kOther;
  std::string gloss;
  std::vector<std::string> examples;
  std::vector<std::string> synonyms;
  std::vector<std::string> antonyms;
  // Depth-1 derivationally related lemmas (recommend -> recommendation).
  std::vector<std::string> derivations;
};

// Lemma+POS keyed sense lists in resource order.
//
// File format: {"<lemma>|<pos>": [{"id", "gloss", "synonyms", "antonyms",
// optional "examples", optional "derivations"}]}. Words are case-folded on
// load and empty synonyms are dropped.
class SenseInventory {
 public:
  static SenseInventory FromJson(const nlohmann::ordered_json& doc);
  static SenseInventory LoadFile(const std::string& path);

  // Senses for one lemma and POS; empty when absent.
  std::vector<const Sense*> Senses(const std::string& lemma,
                                   CoarsePos pos) const;
  const std::vector<Sense>& all() const { return senses_; }
  // Lemma/POS keys in resource order.
  const std::vector<std::pair<std::string, CoarsePos>>& keys() const {
    return keys_;
  }

 private:
  std::vector<Sense> senses_;
  std::vector<std::pair<std::string, CoarsePos>> keys_;
  std::map<std::pair<std::string, CoarsePos>, std::vector<size_t>> index_;
};

// Immutable bundle of the lexical resources: sense inventory, morphology
// (with every inventory lemma registered) and the tagger built on it.
class Lexicon {
 public:
  Lexicon(SenseInventory inventory, Morphology morphology);
  Lexicon(const Lexicon&) = delete;
  Lexicon& operator=(const Lexicon&) = delete;

  static std::unique_ptr<Lexicon> Load(
      const std::string& inventory_path,
      const std::optional<std::string>& inflections_path = std::nullopt);

  const SenseInventory& inventory() const { return inventory_; }
  const Morphology& morphology() const { return morphology_; }
  const RuleTagger& tagger() const { return tagger_; }

  Sentence Tokenize(std::string_view text) const {
    return ssaudit::Tokenize(text, &tagger_);
  }

 private:
  SenseInventory inventory_;
  Morphology morphology_;
  RuleTagger tagger_;
};

// Re-tags a sentence with the lexicon's tagger.
Sentence PosTag(const Sentence& sentence, const Lexicon& lexicon);

// Every sense of the token's word across all POS classes, in resource order.
std::vector<const Sense*> AllSenses(const Token& token, const Lexicon& lexicon);

// Simplified Lesk: the sense whose gloss and examples share the most
// non-stopword words with the surrounding context; ties go to the earlier
// sense. Senses of the tagged POS are preferred when any exist. Throws
// kNoSense for words missing from the inventory.
const Sense& Disambiguate(const Sentence& sentence, size_t i,
                          const Lexicon& lexicon);

// Inflections for each plausible POS plus depth-1 derivational relatives,
// excluding the word itself.
std::set<std::string> MorphologicalSet(const Token& token,
                                       const Lexicon& lexicon);

struct SubstitutionProfile {
  size_t position = 0;
  std::string word;
  std::set<std::string> morphological;
  std::set<std::string> matched;
  std::set<std::string> mismatched;
  std::set<std::string> antonyms;
  // Empty when the word has no senses.
  std::string matched_sense_id;
};

// The four disjoint substitution sets for one position.
SubstitutionProfile BuildSubstitutionProfile(const Sentence& sentence,
                                             size_t i, const Lexicon& lexicon);

}  // namespace ssaudit

#endif  // SSAUDIT_LEXSEM_H_
