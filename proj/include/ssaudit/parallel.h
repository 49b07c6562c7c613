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

#ifndef SSAUDIT_PARALLEL_H_
#define SSAUDIT_PARALLEL_H_

#include <omp.h>

#include <cstddef>
#include <exception>
#include <vector>

namespace ssaudit {

// Threads to use for a job count: values below 1 mean "all available".
inline int ResolveJobs(int jobs) {
  return jobs >= 1 ? jobs : omp_get_max_threads();
}

// out[i] = fn(i) for i in [0, n). With jobs == 1 the loop runs serially on
// the calling thread; otherwise iterations are spread over an OpenMP team.
// Results keep index order, so any later fold is independent of scheduling.
// The exception from the lowest failing index is rethrown.
template <typename R, typename Fn>
std::vector<R> ParallelMap(size_t n, int jobs, Fn&& fn) {
  std::vector<R> out(n);
  const int threads = ResolveJobs(jobs);
  if (threads == 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<size_t>(i)] = fn(static_cast<size_t>(i));
    } catch (...) {
      errors[static_cast<size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace ssaudit

#endif  // SSAUDIT_PARALLEL_H_
