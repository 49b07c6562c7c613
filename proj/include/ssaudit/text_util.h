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

#ifndef SSAUDIT_TEXT_UTIL_H_
#define SSAUDIT_TEXT_UTIL_H_

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace ssaudit {

// ASCII case folding. Bytes outside ASCII pass through unchanged so UTF-8
// sequences survive intact.
inline std::string CaseFold(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && !IsSpace(text[j])) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool IsAsciiPunct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

// True for non-empty strings made only of ASCII punctuation.
inline bool IsPunctuation(std::string_view word) {
  return !word.empty() &&
         std::all_of(word.begin(), word.end(), [](char c) {
           return IsAsciiPunct(c);
         });
}

inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool IsDigits(std::string_view word) {
  return !word.empty() && std::any_of(word.begin(), word.end(), [](char c) {
           return c >= '0' && c <= '9';
         }) && std::none_of(word.begin(), word.end(), IsAsciiAlpha);
}

inline bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

inline std::string Join(const std::vector<std::string>& parts,
                        std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Copies the capitalization pattern of model (all caps or leading capital)
// onto a lower-case word.
inline std::string MatchCase(std::string_view model, std::string_view word) {
  std::string out(word);
  if (model.empty() || out.empty()) return out;
  bool has_alpha = false, all_upper = true;
  for (char c : model) {
    if (IsAsciiAlpha(c)) {
      has_alpha = true;
      if (c >= 'a' && c <= 'z') all_upper = false;
    }
  }
  if (has_alpha && all_upper && model.size() > 1) {
    for (char& c : out) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
  } else if (model[0] >= 'A' && model[0] <= 'Z' && out[0] >= 'a' &&
             out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

}  // namespace ssaudit

#endif  // SSAUDIT_TEXT_UTIL_H_
