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

// Serial reference kernels. The OpenMP versions must agree with these
// exactly; the tests and the benchmark compare the two.

#include <algorithm>

#include "kernels/scan.hpp"

namespace qfc::kernels {

int support_size(const MatrixFp& rows) {
  int s = 0;
  for (int c = 0; c < rows.cols(); ++c) {
    for (int r = 0; r < rows.rows(); ++r) {
      if (rows(r, c) != 0) {
        ++s;
        break;
      }
    }
  }
  return s;
}

SearchResult max_intersection_serial(const IntersectionQuery& q) {
  SearchResult total;
  for (const auto& pivots : pivot_patterns(q.ambient->rows(), q.target_dim)) {
    const auto r = detail::max_intersection_pattern(q, pivots);
    total.best = std::max(total.best, r.best);
    total.subspaces_visited += r.subspaces_visited;
  }
  return total;
}

SearchResult min_support_serial(const MatrixFp& code_basis, int r) {
  SearchResult total{static_cast<std::uint64_t>(code_basis.cols()) + 1, 0};
  for (const auto& pivots : pivot_patterns(code_basis.rows(), r)) {
    const auto part = detail::min_support_pattern(code_basis, pivots);
    total.best = std::min(total.best, part.best);
    total.subspaces_visited += part.subspaces_visited;
  }
  return total;
}

std::vector<std::uint64_t> weight_histogram_serial(const MatrixFp& generator) {
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(generator.cols()) + 1, 0);
  detail::weight_block(generator, 0, detail::message_count(generator), hist);
  return hist;
}

SearchResult max_intersection(const IntersectionQuery& q, ExecPolicy policy) {
  return policy.threads == 1 ? max_intersection_serial(q)
                             : max_intersection_parallel(q, policy.threads);
}

SearchResult min_support(const MatrixFp& code_basis, int r, ExecPolicy policy) {
  return policy.threads == 1 ? min_support_serial(code_basis, r)
                             : min_support_parallel(code_basis, r, policy.threads);
}

std::vector<std::uint64_t> weight_histogram(const MatrixFp& generator, ExecPolicy policy) {
  return policy.threads == 1 ? weight_histogram_serial(generator)
                             : weight_histogram_parallel(generator, policy.threads);
}

}  // namespace qfc::kernels
