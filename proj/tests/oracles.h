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

// Independent brute-force references used only by tests.

#ifndef SSAUDIT_TESTS_ORACLES_H_
#define SSAUDIT_TESTS_ORACLES_H_

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ssaudit::oracle {

// Average precision computed per positive from rank counts, without sorting.
// A positive's rank counts every strictly higher score, every tied negative
// and every tied positive listed before it.
inline double PrecisionAtRankAp(const std::vector<double>& pos,
                                const std::vector<double>& neg) {
  double sum = 0.0;
  for (size_t p = 0; p < pos.size(); ++p) {
    size_t above_pos = 0, rank = 1;
    for (size_t q = 0; q < pos.size(); ++q) {
      if (q == p) continue;
      if (pos[q] > pos[p] || (pos[q] == pos[p] && q < p)) {
        ++above_pos;
        ++rank;
      }
    }
    for (double n : neg) {
      if (n >= pos[p]) ++rank;
    }
    sum += static_cast<double>(above_pos + 1) / static_cast<double>(rank);
  }
  return sum / static_cast<double>(pos.size());
}

inline double RawCosine(const float* a, const float* b, size_t dim) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < dim; ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  double c = dot / (std::sqrt(na) * std::sqrt(nb));
  return c > 1.0 ? 1.0 : (c < -1.0 ? -1.0 : c);
}

// Exhaustive k nearest neighbours by repeated arg-max over raw rows; ties
// go to the lower row index. Returns (row, cosine).
inline std::vector<std::pair<size_t, double>> ExhaustiveKnn(
    const std::vector<float>& rows, size_t dim, size_t query, size_t k) {
  const size_t n = rows.size() / dim;
  std::vector<double> score(n);
  for (size_t r = 0; r < n; ++r) {
    score[r] = RawCosine(&rows[query * dim], &rows[r * dim], dim);
  }
  std::vector<bool> used(n, false);
  used[query] = true;
  std::vector<std::pair<size_t, double>> out;
  while (out.size() < k) {
    size_t best = n;
    for (size_t r = 0; r < n; ++r) {
      if (used[r]) continue;
      if (best == n || score[r] > score[best]) best = r;
    }
    if (best == n) break;
    used[best] = true;
    out.emplace_back(best, score[best]);
  }
  return out;
}

}  // namespace ssaudit::oracle

#endif  // SSAUDIT_TESTS_ORACLES_H_
