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

#include "ssaudit/corpus.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ssaudit/error.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

CoarsePos Coarse(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return CoarsePos::kNoun;
    case Pos::kAdj: return CoarsePos::kAdj;
    case Pos::kAdv: return CoarsePos::kAdv;
    case Pos::kOther: return CoarsePos::kOther;
    default: return CoarsePos::kVerb;
  }
}

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "NOUN";
    case Pos::kAdj: return "ADJ";
    case Pos::kAdv: return "ADV";
    case Pos::kOther: return "OTHER";
    case Pos::kVB: return "VB";
    case Pos::kVBP: return "VBP";
    case Pos::kVBZ: return "VBZ";
    case Pos::kVBD: return "VBD";
    case Pos::kVBG: return "VBG";
    case Pos::kVBN: return "VBN";
  }
  return "OTHER";
}

std::string_view CoarsePosName(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::kNoun: return "noun";
    case CoarsePos::kVerb: return "verb";
    case CoarsePos::kAdj: return "adj";
    case CoarsePos::kAdv: return "adv";
    case CoarsePos::kOther: return "other";
  }
  return "other";
}

std::optional<Pos> ParsePos(std::string_view name) {
  for (Pos p : {Pos::kNoun, Pos::kAdj, Pos::kAdv, Pos::kOther, Pos::kVB,
                Pos::kVBP, Pos::kVBZ, Pos::kVBD, Pos::kVBG, Pos::kVBN}) {
    if (PosName(p) == name) return p;
  }
  return std::nullopt;
}

Token Token::FromSurface(std::string_view surface) {
  Token t;
  t.surface = std::string(surface);
  t.lower = CaseFold(surface);
  t.lemma = t.lower;
  return t;
}

Sentence::Sentence(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) Fail(ErrorCode::kEmptyInput, "sentence has no tokens");
  for (Token& t : tokens_) {
    t.lower = CaseFold(t.surface);
    if (t.lemma.empty()) t.lemma = t.lower;
  }
}

Sentence Sentence::FromWords(const std::vector<std::string>& words,
                             const TaggingAdapter* tagger) {
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (const auto& w : words) tokens.push_back(Token::FromSurface(w));
  if (tagger != nullptr && !tokens.empty()) tagger->Tag(tokens);
  return Sentence(std::move(tokens));
}

std::vector<std::string> Sentence::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const auto& t : tokens_) out.push_back(t.surface);
  return out;
}

std::vector<std::string> Sentence::Lowered() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const auto& t : tokens_) out.push_back(t.lower);
  return out;
}

std::string Sentence::Text() const { return Join(Surfaces(), " "); }

Sentence Sentence::WithReplacement(size_t i, std::string_view surface,
                                   const TaggingAdapter* tagger) const {
  std::vector<Token> tokens = tokens_;
  Token& t = tokens.at(i);
  t.surface = std::string(surface);
  t.lower = CaseFold(surface);
  t.lemma = t.lower;
  if (tagger != nullptr) tagger->Tag(tokens);
  return Sentence(std::move(tokens));
}

Sentence Sentence::Slice(size_t begin, size_t end) const {
  end = std::min(end, tokens_.size());
  begin = std::min(begin, end);
  return Sentence(std::vector<Token>(tokens_.begin() + begin,
                                     tokens_.begin() + end));
}

bool operator==(const Sentence& a, const Sentence& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    const Token& x = a[i];
    const Token& y = b[i];
    if (x.surface != y.surface || x.pos != y.pos || x.lemma != y.lemma) {
      return false;
    }
  }
  return true;
}

namespace {

constexpr std::string_view kTerminalPunct = ".,!?;:";

bool IsTerminalPunct(char c) {
  return kTerminalPunct.find(c) != std::string_view::npos;
}

}  // namespace

Sentence Tokenize(std::string_view text, const TaggingAdapter* tagger) {
  if (Trim(text).empty()) Fail(ErrorCode::kEmptyInput, "blank text");
  std::vector<std::string> words;
  for (const std::string& piece : SplitWhitespace(text)) {
    size_t cut = piece.size();
    while (cut > 0 && IsTerminalPunct(piece[cut - 1])) --cut;
    if (cut == 0 || cut == piece.size()) {
      words.push_back(piece);
    } else {
      words.push_back(piece.substr(0, cut));
      words.push_back(piece.substr(cut));
    }
  }
  return Sentence::FromWords(words, tagger);
}

std::vector<size_t> Align(const Sentence& original,
                          const Sentence& adversarial) {
  if (original.size() != adversarial.size()) {
    Fail(ErrorCode::kAlignment,
         "length mismatch: " + std::to_string(original.size()) + " vs " +
             std::to_string(adversarial.size()));
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < original.size(); ++i) {
    if (original[i].lower != adversarial[i].lower) out.push_back(i);
  }
  return out;
}

AdversarialPair MakePair(Sentence original, Sentence adversarial,
                         std::optional<int> label) {
  std::vector<size_t> indices = Align(original, adversarial);
  return AdversarialPair{std::move(original), std::move(adversarial),
                         std::move(indices), label};
}

PairLoadResult ParsePairs(std::string_view contents,
                          const TaggingAdapter* tagger) {
  PairLoadResult result;
  std::istringstream in{std::string(contents)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      Fail(ErrorCode::kParse,
           "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("original") ||
        !obj.contains("adversarial") || !obj["original"].is_string() ||
        !obj["adversarial"].is_string()) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected string fields original and "
                                  "adversarial");
    }
    std::optional<int> label;
    if (obj.contains("label") && !obj["label"].is_null()) {
      if (!obj["label"].is_number_integer()) {
        Fail(ErrorCode::kParse,
             "line " + std::to_string(line_no) + ": label must be an integer");
      }
      label = obj["label"].get<int>();
    }
    auto orig_words = SplitWhitespace(obj["original"].get<std::string>());
    auto adv_words = SplitWhitespace(obj["adversarial"].get<std::string>());
    if (orig_words.empty() || adv_words.empty()) {
      result.skipped.push_back({line_no, "empty sentence"});
      continue;
    }
    if (orig_words.size() != adv_words.size()) {
      result.skipped.push_back(
          {line_no, "length mismatch: " + std::to_string(orig_words.size()) +
                        " vs " + std::to_string(adv_words.size())});
      continue;
    }
    result.pairs.push_back(MakePair(Sentence::FromWords(orig_words, tagger),
                                    Sentence::FromWords(adv_words, tagger),
                                    label));
  }
  return result;
}

PairLoadResult LoadPairs(const std::string& path,
                         const TaggingAdapter* tagger) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) Fail(ErrorCode::kIo, "read failed: " + path);
  return ParsePairs(buf.str(), tagger);
}

std::string PairToJsonLine(const AdversarialPair& pair) {
  nlohmann::ordered_json obj;
  obj["original"] = pair.original.Text();
  obj["adversarial"] = pair.adversarial.Text();
  if (pair.label) obj["label"] = *pair.label;
  return obj.dump();
}

}  // namespace ssaudit
