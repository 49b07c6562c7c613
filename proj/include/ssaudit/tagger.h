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

#ifndef SSAUDIT_TAGGER_H_
#define SSAUDIT_TAGGER_H_

#include <string>
#include <vector>

#include "ssaudit/corpus.h"
#include "ssaudit/morphology.h"

namespace ssaudit {

// Lexicon-plus-context tagger. Readings come from closed-class word lists,
// the morphology tables (which know every inventory lemma) and suffix
// heuristics for unknown words; a left-to-right pass picks one reading per
// token from the neighbouring words.
class RuleTagger : public TaggingAdapter {
 public:
  explicit RuleTagger(const Morphology& morphology)
      : morphology_(morphology) {}

  void Tag(std::vector<Token>& tokens) const override;

  struct Reading {
    Pos pos;
    std::string lemma;
  };
  // All candidate readings for a token at the given position.
  std::vector<Reading> Readings(const Token& token, size_t position) const;

 private:
  const Morphology& morphology_;
};

bool IsStopword(std::string_view lower);

}  // namespace ssaudit

#endif  // SSAUDIT_TAGGER_H_
