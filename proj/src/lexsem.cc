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

#include "ssaudit/lexsem.h"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "ssaudit/error.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

namespace {

std::vector<std::string> LowerList(const nlohmann::ordered_json& obj,
                                   const char* field, bool required,
                                   const std::string& where) {
  std::vector<std::string> out;
  if (!obj.contains(field)) {
    if (required) Fail(ErrorCode::kParse, where + ": missing " + field);
    return out;
  }
  const auto& arr = obj[field];
  if (!arr.is_array()) Fail(ErrorCode::kParse, where + ": " + field + " must be a list");
  for (const auto& v : arr) {
    if (!v.is_string()) {
      Fail(ErrorCode::kParse, where + ": " + field + " entries must be strings");
    }
    std::string w = CaseFold(Trim(v.get<std::string>()));
    if (w.empty()) continue;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

std::string StripEdgePunct(std::string_view w) {
  size_t b = 0, e = w.size();
  while (b < e && IsAsciiPunct(w[b])) ++b;
  while (e > b && IsAsciiPunct(w[e - 1])) --e;
  return std::string(w.substr(b, e - b));
}

std::unordered_set<std::string> Signature(const Sense& sense) {
  std::unordered_set<std::string> out;
  auto absorb = [&](const std::string& text) {
    for (const auto& piece : SplitWhitespace(text)) {
      std::string w = CaseFold(StripEdgePunct(piece));
      if (!w.empty() && !IsStopword(w)) out.insert(w);
    }
  };
  absorb(sense.gloss);
  for (const auto& ex : sense.examples) absorb(ex);
  return out;
}

}  // namespace

SenseInventory SenseInventory::FromJson(const nlohmann::ordered_json& doc) {
  if (!doc.is_object()) {
    Fail(ErrorCode::kParse, "sense inventory must be a JSON object");
  }
  SenseInventory inv;
  std::unordered_set<std::string> ids;
  for (const auto& [key, list] : doc.items()) {
    auto bar = key.rfind('|');
    if (bar == std::string::npos) {
      Fail(ErrorCode::kParse, "inventory key without '|': " + key);
    }
    auto pos = ParseCoarsePos(key.substr(bar + 1));
    if (!pos) Fail(ErrorCode::kParse, "unknown POS in key: " + key);
    std::string lemma = CaseFold(key.substr(0, bar));
    if (!list.is_array()) Fail(ErrorCode::kParse, key + ": expected a list");
    auto k = std::make_pair(lemma, *pos);
    if (!inv.index_.count(k)) inv.keys_.push_back(k);
    for (const auto& s : list) {
      if (!s.is_object() || !s.contains("id") || !s["id"].is_string()) {
        Fail(ErrorCode::kParse, key + ": every sense needs a string id");
      }
      Sense sense;
      sense.id = s["id"].get<std::string>();
      if (!ids.insert(sense.id).second) {
        Fail(ErrorCode::kParse, "duplicate sense id: " + sense.id);
      }
      sense.lemma = lemma;
      sense.pos = *pos;
      if (s.contains("gloss")) {
        if (!s["gloss"].is_string()) {
          Fail(ErrorCode::kParse, sense.id + ": gloss must be a string");
        }
        sense.gloss = s["gloss"].get<std::string>();
      }
      sense.synonyms = LowerList(s, "synonyms", true, sense.id);
      sense.antonyms = LowerList(s, "antonyms", false, sense.id);
      sense.examples.clear();
      if (s.contains("examples")) {
        for (const auto& e : s["examples"]) {
          if (e.is_string()) sense.examples.push_back(e.get<std::string>());
        }
      }
      sense.derivations = LowerList(s, "derivations", false, sense.id);
      inv.index_[k].push_back(inv.senses_.size());
      inv.senses_.push_back(std::move(sense));
    }
  }
  return inv;
}

SenseInventory SenseInventory::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  try {
    return FromJson(nlohmann::ordered_json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
}

std::vector<const Sense*> SenseInventory::Senses(const std::string& lemma,
                                                 CoarsePos pos) const {
  std::vector<const Sense*> out;
  auto it = index_.find({lemma, pos});
  if (it == index_.end()) return out;
  for (size_t idx : it->second) out.push_back(&senses_[idx]);
  return out;
}

Lexicon::Lexicon(SenseInventory inventory, Morphology morphology)
    : inventory_(std::move(inventory)),
      morphology_(std::move(morphology)),
      tagger_(morphology_) {
  for (const auto& [lemma, pos] : inventory_.keys()) {
    morphology_.AddKnownLemma(lemma, pos);
  }
}

std::unique_ptr<Lexicon> Lexicon::Load(
    const std::string& inventory_path,
    const std::optional<std::string>& inflections_path) {
  SenseInventory inv = SenseInventory::LoadFile(inventory_path);
  Morphology morph = inflections_path ? Morphology::LoadFile(*inflections_path)
                                      : Morphology();
  return std::make_unique<Lexicon>(std::move(inv), std::move(morph));
}

Sentence PosTag(const Sentence& sentence, const Lexicon& lexicon) {
  std::vector<Token> tokens = sentence.tokens();
  lexicon.tagger().Tag(tokens);
  return Sentence(std::move(tokens));
}

namespace {

constexpr CoarsePos kOpenClasses[] = {CoarsePos::kNoun, CoarsePos::kVerb,
                                      CoarsePos::kAdj, CoarsePos::kAdv};

// Lemma of the token under a POS: the tagger's lemma for the tagged class,
// the morphology's lemma otherwise.
std::string LemmaFor(const Token& token, CoarsePos pos,
                     const Morphology& morph) {
  if (Coarse(token.pos) == pos &&
      morph.IsKnownLemma(token.lemma, pos)) {
    return token.lemma;
  }
  return morph.Lemmatize(token.lower, pos);
}

}  // namespace

std::vector<const Sense*> AllSenses(const Token& token,
                                    const Lexicon& lexicon) {
  std::vector<const Sense*> out;
  for (CoarsePos pos : kOpenClasses) {
    auto senses = lexicon.inventory().Senses(
        LemmaFor(token, pos, lexicon.morphology()), pos);
    out.insert(out.end(), senses.begin(), senses.end());
  }
  const Sense* base = lexicon.inventory().all().data();
  std::sort(out.begin(), out.end(), [base](const Sense* a, const Sense* b) {
    return (a - base) < (b - base);
  });
  return out;
}

const Sense& Disambiguate(const Sentence& sentence, size_t i,
                          const Lexicon& lexicon) {
  if (i >= sentence.size()) {
    Fail(ErrorCode::kInvalidArgument, "index out of range");
  }
  const Token& target = sentence[i];
  std::vector<const Sense*> candidates = AllSenses(target, lexicon);
  if (candidates.empty()) {
    Fail(ErrorCode::kNoSense, "no senses for '" + target.lower + "'");
  }
  const CoarsePos tagged = Coarse(target.pos);
  std::vector<const Sense*> same_pos;
  for (const Sense* s : candidates) {
    if (s->pos == tagged) same_pos.push_back(s);
  }
  if (!same_pos.empty()) candidates = std::move(same_pos);

  std::unordered_set<std::string> context;
  for (size_t j = 0; j < sentence.size(); ++j) {
    if (j == i) continue;
    const Token& t = sentence[j];
    if (IsPunctuation(t.lower) || IsStopword(t.lower)) continue;
    context.insert(t.lower);
    context.insert(t.lemma);
  }

  const Sense* best = candidates.front();
  size_t best_overlap = 0;
  for (const Sense* s : candidates) {
    size_t overlap = 0;
    for (const auto& w : Signature(*s)) overlap += context.count(w);
    if (overlap > best_overlap) {
      best = s;
      best_overlap = overlap;
    }
  }
  return *best;
}

std::set<std::string> MorphologicalSet(const Token& token,
                                       const Lexicon& lexicon) {
  const Morphology& morph = lexicon.morphology();
  std::vector<std::pair<CoarsePos, std::string>> readings;
  for (CoarsePos pos : kOpenClasses) {
    std::string lemma = LemmaFor(token, pos, morph);
    if (morph.IsKnownLemma(lemma, pos)) readings.emplace_back(pos, lemma);
  }
  const CoarsePos tagged = Coarse(token.pos);
  if (tagged != CoarsePos::kOther &&
      std::none_of(readings.begin(), readings.end(),
                   [&](const auto& r) { return r.first == tagged; })) {
    readings.emplace_back(tagged, token.lemma.empty() ? token.lower
                                                      : token.lemma);
  }
  if (readings.empty()) {
    for (CoarsePos pos :
         {CoarsePos::kNoun, CoarsePos::kVerb, CoarsePos::kAdj}) {
      readings.emplace_back(pos, token.lower);
    }
  }
  std::set<std::string> out;
  for (const auto& [pos, lemma] : readings) {
    for (auto& form : morph.Paradigm(lemma, pos)) out.insert(form);
    for (const Sense* s : lexicon.inventory().Senses(lemma, pos)) {
      out.insert(s->derivations.begin(), s->derivations.end());
    }
  }
  out.erase(token.lower);
  return out;
}

SubstitutionProfile BuildSubstitutionProfile(const Sentence& sentence,
                                             size_t i,
                                             const Lexicon& lexicon) {
  if (i >= sentence.size()) {
    Fail(ErrorCode::kInvalidArgument, "index out of range");
  }
  const Token& token = sentence[i];
  SubstitutionProfile p;
  p.position = i;
  p.word = token.lower;
  p.morphological = MorphologicalSet(token, lexicon);

  std::vector<const Sense*> senses = AllSenses(token, lexicon);
  if (senses.empty()) return p;
  const Sense& chosen = Disambiguate(sentence, i, lexicon);
  p.matched_sense_id = chosen.id;

  auto keep = [&](const std::string& w) { return w != p.word; };
  for (const auto& w : chosen.synonyms) {
    if (keep(w) && !p.morphological.count(w)) p.matched.insert(w);
  }
  for (const Sense* s : senses) {
    if (s == &chosen) continue;
    for (const auto& w : s->synonyms) {
      if (keep(w) && !p.matched.count(w) && !p.morphological.count(w)) {
        p.mismatched.insert(w);
      }
    }
  }
  for (const Sense* s : senses) {
    for (const auto& w : s->antonyms) {
      if (keep(w) && !p.morphological.count(w) && !p.matched.count(w) &&
          !p.mismatched.count(w)) {
        p.antonyms.insert(w);
      }
    }
  }
  return p;
}

}  // namespace ssaudit
