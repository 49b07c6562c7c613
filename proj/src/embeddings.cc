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

#include "ssaudit/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ssaudit/error.h"
#include "ssaudit/random.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

namespace {

template <typename T>
double CosineImpl(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) {
    Fail(ErrorCode::kInvalidArgument, "cosine of vectors with different sizes");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += static_cast<double>(u[i]) * v[i];
    nu += static_cast<double>(u[i]) * u[i];
    nv += static_cast<double>(v[i]) * v[i];
  }
  if (nu == 0.0 || nv == 0.0) Fail(ErrorCode::kDegenerateVector, "zero vector");
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

bool ParseFloat(std::string_view s, float& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Ordering shared by both kNN paths: higher similarity first, then lower
// vocabulary index.
struct ByScore {
  const std::vector<double>* scores;
  bool operator()(size_t a, size_t b) const {
    const double sa = (*scores)[a], sb = (*scores)[b];
    if (sa != sb) return sa > sb;
    return a < b;
  }
};

}  // namespace

double Cosine(std::span<const float> u, std::span<const float> v) {
  return CosineImpl(u, v);
}

double Cosine(std::span<const double> u, std::span<const double> v) {
  return CosineImpl(u, v);
}

VectorStore::VectorStore(std::vector<std::string> words,
                         std::vector<float> data, size_t dim)
    : dim_(dim) {
  if (dim == 0) Fail(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  if (data.size() != words.size() * dim) {
    Fail(ErrorCode::kInvalidArgument, "data size does not match vocabulary");
  }
  for (size_t r = 0; r < words.size(); ++r) {
    std::span<const float> row(data.data() + r * dim, dim);
    double sq = 0.0;
    for (float x : row) sq += static_cast<double>(x) * x;
    if (sq == 0.0) {
      ++dropped_zero_;
      continue;
    }
    if (index_.count(words[r])) {
      ++dropped_dup_;
      continue;
    }
    index_.emplace(words[r], words_.size());
    words_.push_back(std::move(words[r]));
    data_.insert(data_.end(), row.begin(), row.end());
    norms_.push_back(std::sqrt(sq));
  }
}

VectorStore VectorStore::ParseText(std::string_view contents) {
  std::vector<std::string> words;
  std::vector<float> data;
  size_t dim = 0;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    std::string_view line = contents.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (line_no == 1 && fields.size() == 2 &&
        std::all_of(fields[0].begin(), fields[0].end(), ::isdigit) &&
        std::all_of(fields[1].begin(), fields[1].end(), ::isdigit)) {
      continue;
    }
    if (fields.size() < 2) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected a word and a vector");
    }
    const size_t d = fields.size() - 1;
    if (dim == 0) dim = d;
    if (d != dim) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": dimension " + std::to_string(d) +
                                  " != " + std::to_string(dim));
    }
    for (size_t j = 1; j < fields.size(); ++j) {
      float x;
      if (!ParseFloat(fields[j], x)) {
        Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                    ": bad number '" + fields[j] + "'");
      }
      data.push_back(x);
    }
    words.push_back(std::move(fields[0]));
  }
  if (words.empty()) return VectorStore();
  return VectorStore(std::move(words), std::move(data), dim);
}

VectorStore VectorStore::LoadText(const std::string& path) {
  return ParseText(ReadAll(path));
}

std::optional<size_t> VectorStore::IndexOf(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double VectorStore::RowCosine(size_t a, size_t b) const {
  auto u = Row(a);
  auto v = Row(b);
  double dot = 0.0;
  for (size_t i = 0; i < dim_; ++i) dot += static_cast<double>(u[i]) * v[i];
  return std::clamp(dot / (norms_[a] * norms_[b]), -1.0, 1.0);
}

std::optional<double> VectorStore::WordCosine(std::string_view a,
                                              std::string_view b) const {
  auto ia = IndexOf(a);
  auto ib = IndexOf(b);
  if (!ia || !ib) return std::nullopt;
  return RowCosine(*ia, *ib);
}

std::vector<Neighbor> Knn(const VectorStore& store, std::string_view word,
                          size_t k) {
  auto query = store.IndexOf(word);
  if (!query) Fail(ErrorCode::kOovWord, std::string(word));
  const size_t n = store.size();
  std::vector<double> scores(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < count; ++r) {
    scores[r] = store.RowCosine(*query, static_cast<size_t>(r));
  }
  std::vector<size_t> order;
  order.reserve(n);
  for (size_t r = 0; r < n; ++r) {
    if (r != *query) order.push_back(r);
  }
  const size_t take = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + take, order.end(),
                    ByScore{&scores});
  std::vector<Neighbor> out;
  out.reserve(take);
  for (size_t j = 0; j < take; ++j) {
    out.push_back({store.vocabulary()[order[j]], scores[order[j]]});
  }
  return out;
}

namespace reference {

std::vector<Neighbor> KnnSerial(const VectorStore& store,
                                std::string_view word, size_t k) {
  auto query = store.IndexOf(word);
  if (!query) Fail(ErrorCode::kOovWord, std::string(word));
  std::vector<double> scores(store.size());
  std::vector<size_t> order;
  for (size_t r = 0; r < store.size(); ++r) {
    scores[r] = store.RowCosine(*query, r);
    if (r != *query) order.push_back(r);
  }
  std::sort(order.begin(), order.end(), ByScore{&scores});
  if (order.size() > k) order.resize(k);
  std::vector<Neighbor> out;
  for (size_t r : order) out.push_back({store.vocabulary()[r], scores[r]});
  return out;
}

}  // namespace reference

FrequencyTable FrequencyTable::FromCounts(
    std::vector<std::pair<std::string, uint64_t>> counts) {
  FrequencyTable t;
  std::vector<std::pair<std::string, uint64_t>> unique;
  std::unordered_map<std::string, size_t> seen;
  for (auto& [w, c] : counts) {
    auto it = seen.find(w);
    if (it != seen.end()) {
      unique[it->second].second += c;
    } else {
      seen.emplace(w, unique.size());
      unique.emplace_back(std::move(w), c);
    }
  }
  std::stable_sort(unique.begin(), unique.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  t.by_rank_ = std::move(unique);
  for (size_t r = 0; r < t.by_rank_.size(); ++r) {
    t.rank_.emplace(t.by_rank_[r].first, r + 1);
  }
  return t;
}

FrequencyTable FrequencyTable::ParseTsv(std::string_view contents) {
  std::vector<std::pair<std::string, uint64_t>> counts;
  std::istringstream in{std::string(contents)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected word<TAB>count");
    }
    std::string count_text = Trim(std::string_view(line).substr(tab + 1));
    uint64_t c = 0;
    auto [ptr, ec] = std::from_chars(count_text.data(),
                                     count_text.data() + count_text.size(), c);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size()) {
      Fail(ErrorCode::kParse,
           "line " + std::to_string(line_no) + ": bad count '" + count_text + "'");
    }
    counts.emplace_back(line.substr(0, tab), c);
  }
  return FromCounts(std::move(counts));
}

FrequencyTable FrequencyTable::LoadTsv(const std::string& path) {
  return ParseTsv(ReadAll(path));
}

std::optional<size_t> FrequencyTable::RankOf(std::string_view word) const {
  auto it = rank_.find(std::string(word));
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> SampleFrequencyBand(const FrequencyTable& table,
                                             FrequencyBand band, size_t n,
                                             uint64_t seed) {
  if (band.lo < 1 || band.hi <= band.lo) {
    Fail(ErrorCode::kInvalidArgument, "empty or invalid rank band");
  }
  if (band.hi - 1 > table.size()) {
    Fail(ErrorCode::kBandOutOfRange,
         "band [" + std::to_string(band.lo) + "," + std::to_string(band.hi) +
             ") exceeds table of " + std::to_string(table.size()) + " words");
  }
  const size_t width = band.hi - band.lo;
  if (n > width) {
    Fail(ErrorCode::kInvalidArgument, "sample larger than band");
  }
  // Partial Fisher-Yates over the band's ranks.
  std::vector<size_t> ranks(width);
  std::iota(ranks.begin(), ranks.end(), band.lo);
  Rng rng(seed);
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    size_t pick = j + rng.Below(width - j);
    std::swap(ranks[j], ranks[pick]);
    out.push_back(table.WordAtRank(ranks[j]));
  }
  return out;
}

}  // namespace ssaudit
