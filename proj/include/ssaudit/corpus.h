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

#ifndef SSAUDIT_CORPUS_H_
#define SSAUDIT_CORPUS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ssaudit {

// Coarse open-class tags plus the fine verb subtags the verb-inflection
// audit needs.
enum class Pos : uint8_t {
  kNoun,
  kAdj,
  kAdv,
  kOther,
  kVB,
  kVBP,
  kVBZ,
  kVBD,
  kVBG,
  kVBN,
};

enum class CoarsePos : uint8_t { kNoun, kVerb, kAdj, kAdv, kOther };

CoarsePos Coarse(Pos pos);
inline bool IsVerb(Pos pos) { return Coarse(pos) == CoarsePos::kVerb; }
std::string_view PosName(Pos pos);
std::string_view CoarsePosName(CoarsePos pos);
std::optional<Pos> ParsePos(std::string_view name);

struct Token {
  std::string surface;
  std::string lower;
  Pos pos = Pos::kOther;
  std::string lemma;

  // Untagged token: lower is the case-folded surface and lemma mirrors it.
  static Token FromSurface(std::string_view surface);
};

// Fills pos and lemma on every token. Implementations must be deterministic.
class TaggingAdapter {
 public:
  virtual ~TaggingAdapter() = default;
  virtual void Tag(std::vector<Token>& tokens) const = 0;
};

class Sentence {
 public:
  // Throws kEmptyInput when tokens is empty.
  explicit Sentence(std::vector<Token> tokens);

  // Builds from pre-split surfaces, tagging when a tagger is given.
  static Sentence FromWords(const std::vector<std::string>& words,
                            const TaggingAdapter* tagger = nullptr);

  size_t size() const { return tokens_.size(); }
  const Token& operator[](size_t i) const { return tokens_[i]; }
  const std::vector<Token>& tokens() const { return tokens_; }

  std::vector<std::string> Surfaces() const;
  std::vector<std::string> Lowered() const;
  // Surfaces joined by single spaces.
  std::string Text() const;

  // Copy with token i's surface replaced. The new token keeps the old tag
  // and lemmatizes to its own lower form unless a tagger re-tags it.
  Sentence WithReplacement(size_t i, std::string_view surface,
                           const TaggingAdapter* tagger = nullptr) const;

  // Tokens in [begin, end), clamped to the sentence.
  Sentence Slice(size_t begin, size_t end) const;

  friend bool operator==(const Sentence& a, const Sentence& b);

 private:
  std::vector<Token> tokens_;
};

struct AdversarialPair {
  Sentence original;
  Sentence adversarial;
  std::vector<size_t> perturbed_indices;
  std::optional<int> label;
};

// Whitespace tokenization with trailing terminal punctuation split off.
// Throws kEmptyInput on blank text.
Sentence Tokenize(std::string_view text, const TaggingAdapter* tagger = nullptr);

// Positions whose case-folded tokens differ, ascending. Throws kAlignment
// when lengths differ.
std::vector<size_t> Align(const Sentence& original,
                          const Sentence& adversarial);

AdversarialPair MakePair(Sentence original, Sentence adversarial,
                         std::optional<int> label = std::nullopt);

struct SkippedLine {
  size_t line = 0;
  std::string reason;
};

struct PairLoadResult {
  std::vector<AdversarialPair> pairs;
  std::vector<SkippedLine> skipped;
};

// Reads a JSON Lines pair file. Malformed JSON throws kParse naming the line;
// pairs that fail alignment are skipped and recorded.
PairLoadResult LoadPairs(const std::string& path,
                         const TaggingAdapter* tagger = nullptr);
PairLoadResult ParsePairs(std::string_view contents,
                          const TaggingAdapter* tagger = nullptr);

std::string PairToJsonLine(const AdversarialPair& pair);

}  // namespace ssaudit

#endif  // SSAUDIT_CORPUS_H_
