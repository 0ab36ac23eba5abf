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

// Exhaustive search kernels behind the hierarchy oracles and the weight
// distribution. Every kernel comes in two flavours with identical results:
// a serial reference and an OpenMP version that splits the subspace
// enumeration by pivot pattern (or the message space by blocks) and combines
// with a max/min/sum reduction.

#include <cstdint>
#include <vector>

#include "qfc/subspaces.hpp"

namespace qfc::kernels {

// threads == 1 selects the serial reference; 0 means the OpenMP default.
struct ExecPolicy {
  int threads = 1;
};

// Largest |D cap H| over the `target_dim`-dimensional subspaces H of the row
// space of `ambient` (a k x m matrix with independent rows). D is given as a
// membership table indexed by the base-p encoding of vectors of F_p^m.
struct IntersectionQuery {
  const MatrixFp* ambient = nullptr;
  int target_dim = 0;
  const std::vector<std::uint8_t>* members_of_d = nullptr;
};

struct SearchResult {
  std::uint64_t best = 0;
  std::uint64_t subspaces_visited = 0;
};

SearchResult max_intersection_serial(const IntersectionQuery& q);
SearchResult max_intersection_parallel(const IntersectionQuery& q, int threads);
SearchResult max_intersection(const IntersectionQuery& q, ExecPolicy policy);

// Smallest support size of the span of r rows combined from `code_basis`
// (k x n, independent rows), over all r-dimensional subspaces of F_p^k.
SearchResult min_support_serial(const MatrixFp& code_basis, int r);
SearchResult min_support_parallel(const MatrixFp& code_basis, int r, int threads);
SearchResult min_support(const MatrixFp& code_basis, int r, ExecPolicy policy);

// Number of codewords x G of each Hamming weight 0..n, x over all of F_p^k.
std::vector<std::uint64_t> weight_histogram_serial(const MatrixFp& generator);
std::vector<std::uint64_t> weight_histogram_parallel(const MatrixFp& generator, int threads);
std::vector<std::uint64_t> weight_histogram(const MatrixFp& generator, ExecPolicy policy);

// Number of nonzero columns of the row space spanned by `rows`.
int support_size(const MatrixFp& rows);

}  // namespace qfc::kernels
