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

#include "ssaudit/tagger.h"

#include <algorithm>
#include <set>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "ssaudit/text_util.h"

namespace ssaudit {

namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet& Determiners() {
  static const WordSet s = {"a",     "an",      "the",     "this",  "that",
                            "these", "those",   "every",   "each",  "some",
                            "any",   "no",      "another", "either",
                            "neither", "all",   "both",    "my",    "your",
                            "his",   "her",     "its",     "our",   "their"};
  return s;
}

const WordSet& SubjectPronouns() {
  static const WordSet s = {"i", "you", "he", "she", "it", "we", "they",
                            "who"};
  return s;
}

const WordSet& OtherPronouns() {
  static const WordSet s = {"me",     "him",     "us",       "them",
                            "whom",   "whose",   "which",    "what",
                            "myself", "himself", "herself",  "itself",
                            "ourselves", "themselves", "yourself", "mine",
                            "yours",  "hers",    "ours",     "theirs",
                            "something", "nothing", "anything", "everything",
                            "someone", "anyone", "everyone", "nobody"};
  return s;
}

const WordSet& Prepositions() {
  static const WordSet s = {
      "of",     "in",      "on",     "at",      "by",      "for",
      "with",   "about",   "against", "between", "into",   "through",
      "during", "before",  "after",  "above",   "below",   "to",
      "from",   "up",      "down",   "out",     "off",     "over",
      "under",  "than",    "since",  "until",   "upon",    "onto",
      "within", "without", "toward", "towards", "across",  "around",
      "near",   "per",     "via",    "among",   "despite", "behind",
      "beyond", "amid",    "along",  "beside",  "inside",  "outside"};
  return s;
}

const WordSet& Conjunctions() {
  static const WordSet s = {"and",    "or",       "but",    "nor",
                            "yet",    "if",       "because", "although",
                            "while",  "whereas",  "though", "unless",
                            "whether", "so",      "as",     "when",
                            "where",  "why",      "how",    "then"};
  return s;
}

const WordSet& Modals() {
  static const WordSet s = {"can",    "could", "may",   "might", "must",
                            "shall",  "should", "will", "would", "'ll",
                            "cannot", "wo",    "ca"};
  return s;
}

const WordSet& ClosedAdverbs() {
  static const WordSet s = {"not",   "n't",    "very",  "too",    "also",
                            "just",  "only",   "even",  "still",  "already",
                            "never", "always", "often", "there",  "here",
                            "now",   "again",  "ever",  "soon",   "almost",
                            "quite", "rather", "yesterday", "today",
                            "tomorrow", "ago", "however", "perhaps"};
  return s;
}

struct AuxForm {
  Pos pos;
  std::string_view lemma;
};

const std::unordered_map<std::string_view, AuxForm>& AuxForms() {
  static const std::unordered_map<std::string_view, AuxForm> m = {
      {"be", {Pos::kVB, "be"}},       {"am", {Pos::kVBP, "be"}},
      {"are", {Pos::kVBP, "be"}},     {"is", {Pos::kVBZ, "be"}},
      {"was", {Pos::kVBD, "be"}},     {"were", {Pos::kVBD, "be"}},
      {"been", {Pos::kVBN, "be"}},    {"being", {Pos::kVBG, "be"}},
      {"have", {Pos::kVBP, "have"}},  {"has", {Pos::kVBZ, "have"}},
      {"had", {Pos::kVBD, "have"}},   {"having", {Pos::kVBG, "have"}},
      {"do", {Pos::kVBP, "do"}},      {"does", {Pos::kVBZ, "do"}},
      {"did", {Pos::kVBD, "do"}},     {"done", {Pos::kVBN, "do"}},
      {"doing", {Pos::kVBG, "do"}},
  };
  return m;
}

bool Has(const WordSet& s, std::string_view w) { return s.count(w) > 0; }

bool IsBeForm(std::string_view w) {
  auto it = AuxForms().find(w);
  return it != AuxForms().end() && it->second.lemma == "be";
}
bool IsHaveForm(std::string_view w) {
  auto it = AuxForms().find(w);
  return it != AuxForms().end() && it->second.lemma == "have";
}
bool IsDoForm(std::string_view w) {
  auto it = AuxForms().find(w);
  return it != AuxForms().end() && it->second.lemma == "do" && w != "doing" &&
         w != "done";
}

Pos VerbPos(FormTag form) {
  switch (form) {
    case FormTag::kVBZ: return Pos::kVBZ;
    case FormTag::kVBD: return Pos::kVBD;
    case FormTag::kVBG: return Pos::kVBG;
    case FormTag::kVBN: return Pos::kVBN;
    default: return Pos::kVBP;
  }
}

bool IsCapitalized(std::string_view s) {
  return !s.empty() && s[0] >= 'A' && s[0] <= 'Z';
}

const char* const kNounSuffixes[] = {"tion", "sion", "ment", "ness", "ity",
                                     "ism",  "ist",  "ship", "ance", "ence",
                                     "hood", "er",   "or"};
const char* const kAdjSuffixes[] = {"ous", "ful", "able", "ible", "ive",
                                    "al",  "ic",  "less", "ish",  "ary"};

}  // namespace

bool IsStopword(std::string_view w) {
  return Has(Determiners(), w) || Has(SubjectPronouns(), w) ||
         Has(OtherPronouns(), w) || Has(Prepositions(), w) ||
         Has(Conjunctions(), w) || Has(Modals(), w) ||
         Has(ClosedAdverbs(), w) || AuxForms().count(w) > 0 || w == "s" ||
         w == "'s" || w == "t";
}

std::vector<RuleTagger::Reading> RuleTagger::Readings(const Token& token,
                                                      size_t position) const {
  const std::string& w = token.lower;
  std::vector<Reading> out;
  auto add = [&](Pos pos, std::string lemma) {
    for (const Reading& r : out) {
      if (r.pos == pos && r.lemma == lemma) return;
    }
    out.push_back({pos, std::move(lemma)});
  };
  if (IsPunctuation(w) || IsDigits(w)) {
    add(Pos::kOther, w);
    return out;
  }
  if (auto it = AuxForms().find(w); it != AuxForms().end()) {
    add(it->second.pos, std::string(it->second.lemma));
    return out;
  }
  if (Has(Determiners(), w) || Has(SubjectPronouns(), w) ||
      Has(OtherPronouns(), w) || Has(Prepositions(), w) ||
      Has(Conjunctions(), w) || Has(Modals(), w)) {
    add(Pos::kOther, w);
    return out;
  }
  if (Has(ClosedAdverbs(), w)) {
    add(Pos::kAdv, w);
    return out;
  }
  for (const auto& a : morphology_.Analyze(w)) {
    switch (a.pos) {
      case CoarsePos::kNoun: add(Pos::kNoun, a.lemma); break;
      case CoarsePos::kAdj: add(Pos::kAdj, a.lemma); break;
      case CoarsePos::kAdv: add(Pos::kAdv, a.lemma); break;
      case CoarsePos::kVerb: add(VerbPos(a.form), a.lemma); break;
      default: break;
    }
  }
  if (!out.empty()) return out;

  // Unknown word: suffix heuristics.
  if (position > 0 && IsCapitalized(token.surface)) {
    add(Pos::kNoun, w);
    return out;
  }
  if (EndsWith(w, "ly") && w.size() > 4) {
    add(Pos::kAdv, w);
    return out;
  }
  if (EndsWith(w, "ing") && w.size() > 4) {
    add(Pos::kVBG, Morphology::GuessLemma(w, FormTag::kVBG));
    add(Pos::kNoun, w);
    return out;
  }
  if (EndsWith(w, "ed") && w.size() > 3) {
    std::string lemma = Morphology::GuessLemma(w, FormTag::kVBD);
    add(Pos::kVBD, lemma);
    add(Pos::kVBN, lemma);
    add(Pos::kAdj, w);
    return out;
  }
  for (const char* suffix : kAdjSuffixes) {
    if (EndsWith(w, suffix) && w.size() > std::string_view(suffix).size() + 2) {
      add(Pos::kAdj, w);
      return out;
    }
  }
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      w.size() > 3) {
    std::string lemma = Morphology::GuessLemma(w, FormTag::kNNS);
    add(Pos::kNoun, lemma);
    add(Pos::kVBZ, lemma);
    return out;
  }
  for (const char* suffix : kNounSuffixes) {
    if (EndsWith(w, suffix) && w.size() > std::string_view(suffix).size() + 2) {
      add(Pos::kNoun, w);
      return out;
    }
  }
  add(Pos::kNoun, w);
  add(Pos::kVBP, w);
  return out;
}

void RuleTagger::Tag(std::vector<Token>& tokens) const {
  for (Token& tok : tokens) tok.lower = CaseFold(tok.surface);
  // Whether the current clause already has a finite verb.
  bool clause_finite = false;
  auto is_finite = [](Pos p) {
    return p == Pos::kVBZ || p == Pos::kVBD || p == Pos::kVBP;
  };
  for (size_t i = 0; i < tokens.size(); ++i) {
    Token& tok = tokens[i];
    if (i > 0) {
      const Token& before = tokens[i - 1];
      if (Has(Conjunctions(), before.lower) || IsPunctuation(before.lower)) {
        clause_finite = false;
      } else if (is_finite(before.pos) || Has(Modals(), before.lower)) {
        clause_finite = true;
      }
    }
    std::vector<Reading> readings = Readings(tok, i);

    const std::string prev = i > 0 ? tokens[i - 1].lower : std::string();
    const Pos prev_pos = i > 0 ? tokens[i - 1].pos : Pos::kOther;
    const std::string next =
        i + 1 < tokens.size() ? CaseFold(tokens[i + 1].surface) : std::string();

    const bool base_ctx =
        Has(Modals(), prev) || IsDoForm(prev) ||
        (prev == "to" && !next.empty() &&
         (Has(Determiners(), next) || Has(OtherPronouns(), next) ||
          Has(SubjectPronouns(), next) || Has(ClosedAdverbs(), next)));
    const bool infinitive_ctx = prev == "to" || base_ctx;
    const bool have_ctx = IsHaveForm(prev);
    const bool be_ctx = IsBeForm(prev);
    const bool nominal_ctx =
        Has(Determiners(), prev) || prev_pos == Pos::kAdj ||
        (Has(Prepositions(), prev) && prev != "to") || IsDigits(prev);
    const bool finite_ctx =
        (prev_pos == Pos::kNoun && !clause_finite) ||
        Has(SubjectPronouns(), prev);
    const bool object_next = Has(Determiners(), next) ||
                             Has(OtherPronouns(), next);

    auto find = [&](auto pred) -> const Reading* {
      for (const Reading& r : readings) {
        if (pred(r.pos)) return &r;
      }
      return nullptr;
    };
    auto find_pos = [&](Pos p) { return find([p](Pos q) { return q == p; }); };
    auto find_coarse = [&](CoarsePos c) {
      return find([c](Pos q) { return Coarse(q) == c; });
    };

    std::set<CoarsePos> classes;
    for (const Reading& r : readings) classes.insert(Coarse(r.pos));
    const Reading* verb = find_coarse(CoarsePos::kVerb);
    const Reading* noun = find_coarse(CoarsePos::kNoun);
    const Reading* adj = find_coarse(CoarsePos::kAdj);
    const Reading* adv = find_coarse(CoarsePos::kAdv);

    CoarsePos chosen;
    if (classes.size() == 1) {
      chosen = *classes.begin();
    } else if (verb && (base_ctx || (infinitive_ctx && find_pos(Pos::kVBP)))) {
      chosen = CoarsePos::kVerb;
    } else if (verb && (have_ctx || be_ctx) &&
               (find_pos(Pos::kVBN) || find_pos(Pos::kVBG))) {
      chosen = CoarsePos::kVerb;
    } else if (nominal_ctx && (noun || adj)) {
      chosen = noun ? CoarsePos::kNoun : CoarsePos::kAdj;
      if (noun && adj && i + 1 < tokens.size()) {
        // Adjective reading when a noun follows: "a good day".
        for (const Reading& r : Readings(tokens[i + 1], i + 1)) {
          if (Coarse(r.pos) == CoarsePos::kNoun) chosen = CoarsePos::kAdj;
        }
      }
    } else if (verb && finite_ctx &&
               find([](Pos q) {
                 return q == Pos::kVBP || q == Pos::kVBZ || q == Pos::kVBD;
               })) {
      chosen = CoarsePos::kVerb;
    } else if (verb && object_next) {
      chosen = CoarsePos::kVerb;
    } else if (noun) {
      chosen = CoarsePos::kNoun;
    } else if (adj) {
      chosen = CoarsePos::kAdj;
    } else if (verb) {
      chosen = CoarsePos::kVerb;
    } else if (adv) {
      chosen = CoarsePos::kAdv;
    } else {
      chosen = CoarsePos::kOther;
    }

    const Reading* pick = nullptr;
    if (chosen == CoarsePos::kVerb) {
      const Reading* base = find_pos(Pos::kVBP);
      if (!base) base = find_pos(Pos::kVB);
      if (infinitive_ctx && base) {
        tok.pos = Pos::kVB;
        tok.lemma = base->lemma;
        continue;
      }
      if (have_ctx) pick = find_pos(Pos::kVBN);
      if (!pick && be_ctx) {
        pick = find_pos(Pos::kVBG);
        if (!pick) pick = find_pos(Pos::kVBN);
      }
      if (!pick && base) {
        tok.pos = i == 0 ? Pos::kVB : Pos::kVBP;
        tok.lemma = base->lemma;
        continue;
      }
      for (Pos p : {Pos::kVBZ, Pos::kVBG, Pos::kVBD, Pos::kVBN, Pos::kVB}) {
        if (!pick) pick = find_pos(p);
      }
    } else {
      pick = find_coarse(chosen);
    }
    if (pick) {
      tok.pos = pick->pos;
      tok.lemma = pick->lemma;
    } else {
      tok.pos = Pos::kOther;
      tok.lemma = tok.lower;
    }
    if (tok.lemma.empty()) tok.lemma = tok.lower;
  }
}

}  // namespace ssaudit
