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

#include "ssaudit/morphology.h"

#include <algorithm>
#include <fstream>

#include "ssaudit/error.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsConsonant(char c) { return IsAsciiAlpha(c) && !IsVowel(c); }

int VowelGroups(std::string_view w) {
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    bool v = IsVowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Monosyllabic consonant-vowel-consonant stems double the final consonant
// (win -> winning, set -> setting).
bool ShouldDouble(std::string_view w) {
  if (w.size() < 3) return false;
  char last = w[w.size() - 1];
  char mid = w[w.size() - 2];
  char first = w[w.size() - 3];
  return IsConsonant(last) && last != 'w' && last != 'x' && last != 'y' &&
         IsVowel(mid) && IsConsonant(first) && VowelGroups(w) == 1;
}

bool EndsSibilant(std::string_view w) {
  return EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
         EndsWith(w, "ch") || EndsWith(w, "sh");
}

bool ConsonantY(std::string_view w) {
  return w.size() >= 2 && w.back() == 'y' && IsConsonant(w[w.size() - 2]);
}

std::string Stem(std::string_view w, size_t drop) {
  return std::string(w.substr(0, w.size() - drop));
}

std::string PluralS(std::string_view w) {
  if (EndsSibilant(w)) return std::string(w) + "es";
  if (ConsonantY(w)) return Stem(w, 1) + "ies";
  return std::string(w) + "s";
}

std::string PastEd(std::string_view w) {
  if (EndsWith(w, "e")) return std::string(w) + "d";
  if (ConsonantY(w)) return Stem(w, 1) + "ied";
  if (ShouldDouble(w)) return std::string(w) + w.back() + "ed";
  return std::string(w) + "ed";
}

std::string Gerund(std::string_view w) {
  if (EndsWith(w, "ie")) return Stem(w, 2) + "ying";
  if (w.size() > 2 && EndsWith(w, "e") && !EndsWith(w, "ee") &&
      !EndsWith(w, "ye") && !EndsWith(w, "oe")) {
    return Stem(w, 1) + "ing";
  }
  if (ShouldDouble(w)) return std::string(w) + w.back() + "ing";
  return std::string(w) + "ing";
}

std::optional<std::string> Degree(std::string_view w, std::string_view suffix) {
  if (VowelGroups(w) > 1 && !ConsonantY(w)) return std::nullopt;
  if (EndsWith(w, "e")) return std::string(w) + std::string(suffix.substr(1));
  if (ConsonantY(w)) return Stem(w, 1) + "i" + std::string(suffix);
  if (ShouldDouble(w)) return std::string(w) + w.back() + std::string(suffix);
  return std::string(w) + std::string(suffix);
}

// Candidate stems a suffix rule could have produced the word from.
std::vector<std::string> CandidateStems(std::string_view w) {
  std::vector<std::string> out;
  auto add = [&](std::string s) {
    if (!s.empty() && std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(std::move(s));
    }
  };
  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };
  static constexpr Rule kRules[] = {
      {"ies", "y"}, {"es", ""},   {"s", ""},    {"ied", "y"}, {"ed", ""},
      {"ed", "e"},  {"ying", "ie"}, {"ing", ""}, {"ing", "e"}, {"iest", "y"},
      {"ier", "y"}, {"est", ""},  {"est", "e"}, {"er", ""},   {"er", "e"},
  };
  for (const Rule& r : kRules) {
    if (w.size() > r.suffix.size() + 1 && EndsWith(w, r.suffix)) {
      std::string s = Stem(w, r.suffix.size()) + std::string(r.replacement);
      add(s);
      if (r.replacement.empty() && s.size() >= 2 &&
          s[s.size() - 1] == s[s.size() - 2]) {
        add(s.substr(0, s.size() - 1));
      }
    }
  }
  return out;
}

void AddBuiltins(Morphology& m) {
  using F = FormTag;
  const auto v = CoarsePos::kVerb;
  m.AddForm("be", v, F::kVBZ, "is");
  m.AddForm("be", v, F::kVBD, "was");
  m.AddForm("be", v, F::kVBG, "being");
  m.AddForm("be", v, F::kVBN, "been");
  m.AddVariant("be", v, F::kVBD, "were");
  m.AddVariant("be", v, F::kBase, "am");
  m.AddVariant("be", v, F::kBase, "are");
  m.AddForm("have", v, F::kVBZ, "has");
  m.AddForm("have", v, F::kVBD, "had");
  m.AddForm("have", v, F::kVBG, "having");
  m.AddForm("have", v, F::kVBN, "had");
  m.AddForm("do", v, F::kVBZ, "does");
  m.AddForm("do", v, F::kVBD, "did");
  m.AddForm("do", v, F::kVBG, "doing");
  m.AddForm("do", v, F::kVBN, "done");
}

}  // namespace

std::string_view FormTagName(FormTag tag) {
  switch (tag) {
    case FormTag::kBase: return "BASE";
    case FormTag::kVBZ: return "VBZ";
    case FormTag::kVBD: return "VBD";
    case FormTag::kVBG: return "VBG";
    case FormTag::kVBN: return "VBN";
    case FormTag::kNNS: return "NNS";
    case FormTag::kJJR: return "JJR";
    case FormTag::kJJS: return "JJS";
  }
  return "BASE";
}

std::optional<FormTag> ParseFormTag(std::string_view name) {
  if (name == "VB" || name == "VBP" || name == "BASE") return FormTag::kBase;
  for (FormTag t : {FormTag::kVBZ, FormTag::kVBD, FormTag::kVBG, FormTag::kVBN,
                    FormTag::kNNS, FormTag::kJJR, FormTag::kJJS}) {
    if (FormTagName(t) == name) return t;
  }
  return std::nullopt;
}

const std::vector<FormTag>& FormTagsFor(CoarsePos pos) {
  static const std::vector<FormTag> kVerb = {FormTag::kVBZ, FormTag::kVBD,
                                             FormTag::kVBG, FormTag::kVBN};
  static const std::vector<FormTag> kNoun = {FormTag::kNNS};
  static const std::vector<FormTag> kAdj = {FormTag::kJJR, FormTag::kJJS};
  static const std::vector<FormTag> kNone;
  switch (pos) {
    case CoarsePos::kVerb: return kVerb;
    case CoarsePos::kNoun: return kNoun;
    case CoarsePos::kAdj: return kAdj;
    default: return kNone;
  }
}

std::optional<CoarsePos> ParseCoarsePos(std::string_view name) {
  std::string n = CaseFold(name);
  if (n == "noun" || n == "n") return CoarsePos::kNoun;
  if (n == "verb" || n == "v") return CoarsePos::kVerb;
  if (n == "adj" || n == "a" || n == "s") return CoarsePos::kAdj;
  if (n == "adv" || n == "r") return CoarsePos::kAdv;
  return std::nullopt;
}

Morphology::Morphology() { AddBuiltins(*this); }

Morphology Morphology::FromJson(const nlohmann::json& table) {
  if (!table.is_object()) {
    Fail(ErrorCode::kParse, "inflection table must be a JSON object");
  }
  Morphology m;
  for (const auto& [key, slots] : table.items()) {
    auto bar = key.rfind('|');
    if (bar == std::string::npos) {
      Fail(ErrorCode::kParse, "inflection key without '|': " + key);
    }
    auto pos = ParseCoarsePos(key.substr(bar + 1));
    if (!pos) Fail(ErrorCode::kParse, "unknown POS in key: " + key);
    std::string lemma = CaseFold(key.substr(0, bar));
    m.AddKnownLemma(lemma, *pos);
    if (!slots.is_object()) {
      Fail(ErrorCode::kParse, "inflection entry must be an object: " + key);
    }
    for (const auto& [slot, form] : slots.items()) {
      auto tag = ParseFormTag(slot);
      if (!tag || *tag == FormTag::kBase || !form.is_string()) continue;
      m.AddForm(lemma, *pos, *tag, CaseFold(form.get<std::string>()));
    }
  }
  return m;
}

Morphology Morphology::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  try {
    return FromJson(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
}

void Morphology::AddForm(const std::string& lemma, CoarsePos pos, FormTag tag,
                         const std::string& form) {
  AddKnownLemma(lemma, pos);
  table_[{lemma, pos}][tag] = form;
  AddVariant(lemma, pos, tag, form);
}

void Morphology::AddVariant(const std::string& lemma, CoarsePos pos,
                            FormTag tag, const std::string& form) {
  AddKnownLemma(lemma, pos);
  auto& readings = reverse_[form];
  Analysis a{lemma, pos, tag};
  if (std::find(readings.begin(), readings.end(), a) == readings.end()) {
    readings.push_back(std::move(a));
  }
}

void Morphology::AddKnownLemma(const std::string& lemma, CoarsePos pos) {
  known_.insert({lemma, pos});
  known_any_.insert(lemma);
}

bool Morphology::IsKnownLemma(std::string_view lemma, CoarsePos pos) const {
  return known_.count({std::string(lemma), pos}) > 0;
}

bool Morphology::IsKnownAnyPos(std::string_view lemma) const {
  return known_any_.find(lemma) != known_any_.end();
}

std::optional<std::string> Morphology::RuleInflect(std::string_view lemma,
                                                   CoarsePos pos,
                                                   FormTag tag) {
  if (tag == FormTag::kBase) return std::string(lemma);
  switch (pos) {
    case CoarsePos::kVerb:
      switch (tag) {
        case FormTag::kVBZ: return PluralS(lemma);
        case FormTag::kVBD:
        case FormTag::kVBN: return PastEd(lemma);
        case FormTag::kVBG: return Gerund(lemma);
        default: return std::nullopt;
      }
    case CoarsePos::kNoun:
      if (tag == FormTag::kNNS) return PluralS(lemma);
      return std::nullopt;
    case CoarsePos::kAdj:
      if (tag == FormTag::kJJR) return Degree(lemma, "er");
      if (tag == FormTag::kJJS) return Degree(lemma, "est");
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<std::string> Morphology::Inflect(std::string_view lemma,
                                               CoarsePos pos,
                                               FormTag tag) const {
  if (tag == FormTag::kBase) return std::string(lemma);
  auto it = table_.find({std::string(lemma), pos});
  if (it != table_.end()) {
    auto slot = it->second.find(tag);
    if (slot != it->second.end()) return slot->second;
  }
  return RuleInflect(lemma, pos, tag);
}

std::vector<std::string> Morphology::Paradigm(std::string_view lemma,
                                              CoarsePos pos) const {
  std::vector<std::string> out{std::string(lemma)};
  for (FormTag tag : FormTagsFor(pos)) {
    auto form = Inflect(lemma, pos, tag);
    if (form && std::find(out.begin(), out.end(), *form) == out.end()) {
      out.push_back(*form);
    }
  }
  return out;
}

std::vector<Morphology::Analysis> Morphology::Analyze(
    std::string_view word) const {
  std::vector<Analysis> out;
  auto add = [&](Analysis a) {
    if (std::find(out.begin(), out.end(), a) == out.end()) {
      out.push_back(std::move(a));
    }
  };
  const std::string w(word);
  for (CoarsePos pos : {CoarsePos::kNoun, CoarsePos::kVerb, CoarsePos::kAdj,
                        CoarsePos::kAdv}) {
    if (IsKnownLemma(w, pos)) add({w, pos, FormTag::kBase});
  }
  if (auto it = reverse_.find(w); it != reverse_.end()) {
    for (const Analysis& a : it->second) add(a);
  }
  for (const std::string& stem : CandidateStems(w)) {
    for (CoarsePos pos :
         {CoarsePos::kNoun, CoarsePos::kVerb, CoarsePos::kAdj}) {
      if (!IsKnownLemma(stem, pos)) continue;
      for (FormTag tag : FormTagsFor(pos)) {
        auto form = Inflect(stem, pos, tag);
        if (form && *form == w) add({stem, pos, tag});
      }
    }
  }
  return out;
}

std::string Morphology::Lemmatize(std::string_view word, CoarsePos pos) const {
  const std::string w(word);
  if (IsKnownLemma(w, pos)) return w;
  for (const Analysis& a : Analyze(w)) {
    if (a.pos == pos) return a.lemma;
  }
  return w;
}

std::string Morphology::LemmatizeAny(std::string_view word) const {
  const std::string w(word);
  if (IsKnownAnyPos(w)) return w;
  for (CoarsePos pos : {CoarsePos::kVerb, CoarsePos::kNoun, CoarsePos::kAdj,
                        CoarsePos::kAdv}) {
    std::string l = Lemmatize(w, pos);
    if (l != w) return l;
  }
  return w;
}

std::string Morphology::GuessLemma(std::string_view w, FormTag tag) {
  auto restore_e = [](std::string stem) {
    if (stem.empty()) return stem;
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        IsConsonant(stem.back()) && stem.back() != 's' && stem.back() != 'l' &&
        stem.back() != 'z') {
      std::string undoubled = stem.substr(0, stem.size() - 1);
      if (ShouldDouble(undoubled)) return undoubled;
    }
    char last = stem.back();
    if (last == 'v' || last == 'u' || last == 'z' ||
        (last == 'c' && !EndsWith(stem, "ic")) ||
        (last == 'g' && !EndsWith(stem, "ng")) ||
        (EndsWith(stem, "at") && stem.size() > 4)) {
      return stem + "e";
    }
    return stem;
  };
  switch (tag) {
    case FormTag::kVBZ:
    case FormTag::kNNS:
      if (EndsWith(w, "ies") && w.size() > 4) return Stem(w, 3) + "y";
      if (EndsWith(w, "sses") || EndsWith(w, "shes") || EndsWith(w, "ches") ||
          EndsWith(w, "xes") || EndsWith(w, "zes") || EndsWith(w, "oes")) {
        return Stem(w, 2);
      }
      if (EndsWith(w, "s") && !EndsWith(w, "ss") && w.size() > 2) {
        return Stem(w, 1);
      }
      return std::string(w);
    case FormTag::kVBD:
    case FormTag::kVBN:
      if (EndsWith(w, "ied") && w.size() > 4) return Stem(w, 3) + "y";
      if (EndsWith(w, "eed")) return Stem(w, 1);
      if (EndsWith(w, "ed") && w.size() > 3) return restore_e(Stem(w, 2));
      return std::string(w);
    case FormTag::kVBG:
      if (EndsWith(w, "ying") && w.size() == 5) return Stem(w, 4) + "ie";
      if (EndsWith(w, "ing") && w.size() > 4) return restore_e(Stem(w, 3));
      return std::string(w);
    default:
      return std::string(w);
  }
}

}  // namespace ssaudit
