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

#ifndef SSAUDIT_EMBEDDINGS_H_
#define SSAUDIT_EMBEDDINGS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ssaudit {

// dot(u, v) / (|u| |v|). Throws kInvalidArgument on dimension mismatch and
// kDegenerateVector when either side is all zeros.
double Cosine(std::span<const float> u, std::span<const float> v);
double Cosine(std::span<const double> u, std::span<const double> v);

// Immutable word -> vector table. All rows share one dimension; zero rows
// are rejected and repeated words keep their first vector.
class VectorStore {
 public:
  VectorStore() = default;
  VectorStore(std::vector<std::string> words, std::vector<float> data,
              size_t dim);

  // GloVe text format: "word v1 ... vd" per line. A leading word2vec-style
  // "count dim" header is skipped.
  static VectorStore LoadText(const std::string& path);
  static VectorStore ParseText(std::string_view contents);

  size_t size() const { return words_.size(); }
  size_t dim() const { return dim_; }
  const std::vector<std::string>& vocabulary() const { return words_; }
  std::optional<size_t> IndexOf(std::string_view word) const;
  bool Contains(std::string_view word) const { return IndexOf(word).has_value(); }
  std::span<const float> Row(size_t index) const {
    return {data_.data() + index * dim_, dim_};
  }
  double Norm(size_t index) const { return norms_[index]; }

  // Cosine between two rows using the cached norms.
  double RowCosine(size_t a, size_t b) const;
  // Cosine between two vocabulary words; nullopt if either is missing.
  std::optional<double> WordCosine(std::string_view a, std::string_view b) const;

  size_t dropped_zero_rows() const { return dropped_zero_; }
  size_t dropped_duplicates() const { return dropped_dup_; }

 private:
  std::vector<std::string> words_;
  std::vector<float> data_;
  std::vector<double> norms_;
  size_t dim_ = 0;
  std::unordered_map<std::string, size_t> index_;
  size_t dropped_zero_ = 0;
  size_t dropped_dup_ = 0;
};

struct Neighbor {
  std::string word;
  double similarity = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// The k most cosine-similar vocabulary words, excluding the query itself,
// descending with ties broken by vocabulary order. Scores are computed in
// an OpenMP-parallel loop; throws kOovWord for unknown queries.
std::vector<Neighbor> Knn(const VectorStore& store, std::string_view word,
                          size_t k);

namespace reference {

// Single-threaded kNN with a full sort. Kept as the baseline the parallel
// kernel is tested and benchmarked against.
std::vector<Neighbor> KnnSerial(const VectorStore& store,
                                std::string_view word, size_t k);

}  // namespace reference

class FrequencyTable {
 public:
  // Counts in file order; ranks sort by descending count with file order
  // breaking ties.
  static FrequencyTable FromCounts(
      std::vector<std::pair<std::string, uint64_t>> counts);
  // TSV "word<TAB>count" lines.
  static FrequencyTable LoadTsv(const std::string& path);
  static FrequencyTable ParseTsv(std::string_view contents);

  size_t size() const { return by_rank_.size(); }
  // Word at a 1-based rank.
  const std::string& WordAtRank(size_t rank) const {
    return by_rank_.at(rank - 1).first;
  }
  uint64_t CountAtRank(size_t rank) const { return by_rank_.at(rank - 1).second; }
  std::optional<size_t> RankOf(std::string_view word) const;

 private:
  std::vector<std::pair<std::string, uint64_t>> by_rank_;
  std::unordered_map<std::string, size_t> rank_;
};

// Half-open interval of 1-based frequency ranks.
struct FrequencyBand {
  size_t lo = 0;
  size_t hi = 0;

  static constexpr FrequencyBand High() { return {50, 550}; }
  static constexpr FrequencyBand Low() { return {10000, 10500}; }
};

// n distinct words drawn uniformly from the band. Throws kBandOutOfRange
// when the table does not cover the band and kInvalidArgument when n
// exceeds the band width.
std::vector<std::string> SampleFrequencyBand(const FrequencyTable& table,
                                             FrequencyBand band, size_t n,
                                             uint64_t seed);

}  // namespace ssaudit

#endif  // SSAUDIT_EMBEDDINGS_H_
