// Copyright 2026 The qfcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// OpenMP kernels. Work units are pivot patterns (subspace searches) or
// contiguous message blocks (weight histogram); results are combined with
// order-independent reductions so the answer never depends on scheduling.

#include <omp.h>

#include <algorithm>

#include "kernels/scan.hpp"

namespace qfc::kernels {
namespace {

int resolve(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

SearchResult max_intersection_parallel(const IntersectionQuery& q, int threads) {
  const auto patterns = pivot_patterns(q.ambient->rows(), q.target_dim);
  const auto count = static_cast<std::ptrdiff_t>(patterns.size());
  std::uint64_t best = 0;
  std::uint64_t visited = 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve(threads)) \
    reduction(max : best) reduction(+ : visited)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto r = detail::max_intersection_pattern(q, patterns[i]);
    best = std::max(best, r.best);
    visited += r.subspaces_visited;
  }
  return {best, visited};
}

SearchResult min_support_parallel(const MatrixFp& code_basis, int r, int threads) {
  const auto patterns = pivot_patterns(code_basis.rows(), r);
  const auto count = static_cast<std::ptrdiff_t>(patterns.size());
  std::uint64_t best = static_cast<std::uint64_t>(code_basis.cols()) + 1;
  std::uint64_t visited = 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve(threads)) \
    reduction(min : best) reduction(+ : visited)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto part = detail::min_support_pattern(code_basis, patterns[i]);
    best = std::min(best, part.best);
    visited += part.subspaces_visited;
  }
  return {best, visited};
}

std::vector<std::uint64_t> weight_histogram_parallel(const MatrixFp& generator, int threads) {
  const std::size_t bins = static_cast<std::size_t>(generator.cols()) + 1;
  const std::uint64_t total = detail::message_count(generator);
  std::vector<std::uint64_t> hist(bins, 0);
  constexpr std::uint64_t kBlock = 64;
  const auto blocks = static_cast<std::ptrdiff_t>((total + kBlock - 1) / kBlock);
#pragma omp parallel num_threads(resolve(threads))
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static)
    for (std::ptrdiff_t b = 0; b < blocks; ++b) {
      const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
      detail::weight_block(generator, begin, std::min(total, begin + kBlock), local);
    }
#pragma omp critical(qfc_weight_histogram)
    for (std::size_t w = 0; w < bins; ++w) hist[w] += local[w];
  }
  return hist;
}

}  // namespace qfc::kernels
