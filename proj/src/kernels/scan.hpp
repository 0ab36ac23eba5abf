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

#pragma once

// Per-work-unit bodies shared by the serial and OpenMP kernels.

#include <cstdint>
#include <vector>

#include "qfc/kernels.hpp"

namespace qfc::kernels::detail {

// |D cap rowspace(h_basis)|. Walks all combinations with an odometer; every
// digit increment (wrapping or not) adds its basis row once, so the running
// vector always equals sum c_i b_i.
inline std::uint64_t intersection_count(const MatrixFp& h_basis,
                                        const std::vector<std::uint8_t>& table) {
  const int t = h_basis.rows();
  const int m = h_basis.cols();
  const Digit p = h_basis.p();
  std::vector<Digit> coeff(t, 0);
  std::vector<Digit> v(m, 0);
  std::uint64_t hits = 0;
  while (true) {
    std::uint64_t code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + v[i];
    hits += table[code];
    int i = t - 1;
    for (; i >= 0; --i) {
      for (int j = 0; j < m; ++j) {
        v[j] += h_basis(i, j);
        if (v[j] >= p) v[j] -= p;
      }
      if (++coeff[i] < p) break;
      coeff[i] = 0;
    }
    if (i < 0) break;
  }
  return hits;
}

// Scans the subspaces of one pivot pattern of F_p^k (k = ambient rows).
inline SearchResult max_intersection_pattern(const IntersectionQuery& q,
                                             const std::vector<int>& pivots) {
  const MatrixFp& ambient = *q.ambient;
  SubspaceEnumerator e(ambient.rows(), ambient.p(), pivots);
  SearchResult r;
  while (auto c = e.next()) {
    const MatrixFp h = c->basis() * ambient;
    const std::uint64_t hits = intersection_count(h, *q.members_of_d);
    if (hits > r.best) r.best = hits;
    ++r.subspaces_visited;
  }
  return r;
}

inline SearchResult min_support_pattern(const MatrixFp& code_basis,
                                        const std::vector<int>& pivots) {
  SubspaceEnumerator e(code_basis.rows(), code_basis.p(), pivots);
  SearchResult r{static_cast<std::uint64_t>(code_basis.cols()) + 1, 0};
  while (auto x = e.next()) {
    const auto s = static_cast<std::uint64_t>(support_size(x->basis() * code_basis));
    if (s < r.best) r.best = s;
    ++r.subspaces_visited;
  }
  return r;
}

// Adds the weight of x G for messages with encodings in [begin, end).
inline void weight_block(const MatrixFp& g, std::uint64_t begin, std::uint64_t end,
                         std::vector<std::uint64_t>& hist) {
  const int k = g.rows();
  const Digit p = g.p();
  std::vector<Digit> x(k);
  for (std::uint64_t code = begin; code < end; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      x[i] = static_cast<Digit>(c % p);
      c /= p;
    }
    const auto word = row_times(x, g);
    int w = 0;
    for (const Digit d : word) w += d != 0;
    ++hist[w];
  }
}

inline std::uint64_t message_count(const MatrixFp& g) {
  std::uint64_t n = 1;
  for (int i = 0; i < g.rows(); ++i) n *= g.p();
  return n;
}

}  // namespace qfc::kernels::detail
