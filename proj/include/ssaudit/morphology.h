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

#ifndef SSAUDIT_MORPHOLOGY_H_
#define SSAUDIT_MORPHOLOGY_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "ssaudit/corpus.h"

namespace ssaudit {

// Inflected-form slots. kBase is the lemma itself.
enum class FormTag : uint8_t { kBase, kVBZ, kVBD, kVBG, kVBN, kNNS, kJJR, kJJS };

std::string_view FormTagName(FormTag tag);
std::optional<FormTag> ParseFormTag(std::string_view name);
// Non-base slots that exist for a POS (adverbs have none).
const std::vector<FormTag>& FormTagsFor(CoarsePos pos);

// Parses "noun"/"n", "verb"/"v", "adj"/"a"/"s", "adv"/"r".
std::optional<CoarsePos> ParseCoarsePos(std::string_view name);

// Inflection tables with a rule-based fallback for regular morphology.
// Table entries override rules; be/have/do are built in.
class Morphology {
 public:
  struct Analysis {
    std::string lemma;
    CoarsePos pos;
    FormTag form;

    friend bool operator==(const Analysis&, const Analysis&) = default;
  };

  Morphology();

  // {"<lemma>|<pos>": {"VBZ": "...", ...}}. Unknown slot names are ignored.
  static Morphology FromJson(const nlohmann::json& table);
  static Morphology LoadFile(const std::string& path);

  void AddForm(const std::string& lemma, CoarsePos pos, FormTag tag,
               const std::string& form);
  // Registers an additional surface for a slot without changing the
  // canonical form (e.g. "were" next to "was").
  void AddVariant(const std::string& lemma, CoarsePos pos, FormTag tag,
                  const std::string& form);
  void AddKnownLemma(const std::string& lemma, CoarsePos pos);
  bool IsKnownLemma(std::string_view lemma, CoarsePos pos) const;
  bool IsKnownAnyPos(std::string_view lemma) const;

  // Canonical surface for a slot; nullopt when the slot does not exist
  // (e.g. comparatives of long adjectives).
  std::optional<std::string> Inflect(std::string_view lemma, CoarsePos pos,
                                     FormTag tag) const;
  // Lemma plus every distinct inflected form for the POS.
  std::vector<std::string> Paradigm(std::string_view lemma,
                                    CoarsePos pos) const;

  // Every reading of a surface form whose lemma is known (from tables or
  // the inventory), across all open classes.
  std::vector<Analysis> Analyze(std::string_view word) const;

  // Lemma for the POS. Unknown words come back unchanged, so the mapping is
  // idempotent.
  std::string Lemmatize(std::string_view word, CoarsePos pos) const;
  // Tries verb, noun, adjective, adverb in that order.
  std::string LemmatizeAny(std::string_view word) const;

  // Best-effort lemma for a word with no known reading under the given
  // slot, using suffix heuristics only.
  static std::string GuessLemma(std::string_view word, FormTag tag);
  static std::optional<std::string> RuleInflect(std::string_view lemma,
                                                CoarsePos pos, FormTag tag);

 private:
  using Key = std::pair<std::string, CoarsePos>;

  std::map<Key, std::map<FormTag, std::string>> table_;
  std::unordered_map<std::string, std::vector<Analysis>> reverse_;
  std::set<Key> known_;
  std::set<std::string, std::less<>> known_any_;
};

}  // namespace ssaudit

#endif  // SSAUDIT_MORPHOLOGY_H_
