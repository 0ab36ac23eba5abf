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

// Dense linear algebra over F_p and canonical F_p-subspaces of F_p^m.
//
// A Subspace is stored as its reduced row-echelon basis, so two subspaces
// are equal exactly when their basis matrices are identical. Subspaces of a
// fixed dimension k are enumerated cell by cell: first by pivot-column set
// (lexicographic), then by the free entries of the echelon form. Each pivot
// pattern is an independent unit of work.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qfc/gf.hpp"

namespace qfc {

using gf::Digit;

class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(int rows, int cols, Digit p);

  static MatrixFp identity(int n, Digit p);
  // Entries are reduced mod p. All rows must have the same length; cols is
  // needed to describe an empty list of rows.
  static MatrixFp from_rows(const std::vector<std::vector<Digit>>& rows, int cols, Digit p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Digit p() const { return p_; }

  Digit& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Digit operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<Digit> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const Digit> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  MatrixFp transpose() const;
  MatrixFp operator*(const MatrixFp& rhs) const;
  // Keeps the listed rows, in order.
  MatrixFp select_rows(std::span<const int> which) const;
  // Rows of *this followed by rows of below; column counts must match.
  MatrixFp stack(const MatrixFp& below) const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Digit p_ = 0;
  std::vector<Digit> data_;
};

// Row-reduces a in place to reduced row-echelon form and returns the pivot
// columns. Zero rows end up at the bottom.
std::vector<int> rref_in_place(MatrixFp& a);
int rank(const MatrixFp& a);
std::optional<MatrixFp> inverse(const MatrixFp& a);

// Row vector times matrix: v (length a.rows()) * a.
std::vector<Digit> row_times(std::span<const Digit> v, const MatrixFp& a);

class Subspace {
 public:
  static Subspace zero(int m, Digit p);
  static Subspace full(int m, Digit p);
  // Row space of the given vectors (each of length m).
  static Subspace span(int m, Digit p, const std::vector<std::vector<Digit>>& vectors);
  static Subspace row_space(const MatrixFp& a);

  int ambient_dim() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  Digit p() const { return basis_.p(); }
  // k x m basis in reduced row-echelon form.
  const MatrixFp& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // p^dim.
  std::uint64_t size() const;

  bool contains(std::span<const Digit> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  friend class SubspaceEnumerator;
  Subspace(MatrixFp rref_basis, std::vector<int> pivots)
      : basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {}

  MatrixFp basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// {v : a v^T = 0}, a subspace of F_p^{a.cols()}.
Subspace null_space(const MatrixFp& a);

// All p^dim members, lexicographic over the coefficient tuple (c_0, ...,
// c_{k-1}) of the combination sum c_i b_i with c_0 varying slowest.
std::vector<std::vector<Digit>> members(const Subspace& h);
// Same order, each member given by its base-p encoding (coordinate 0 least
// significant), matching gf::FieldCtx::encode.
std::vector<std::uint64_t> member_codes(const Subspace& h);

// Number of k-dimensional subspaces of F_p^m. Saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(int m, int k, Digit p);

// Pivot-column sets of size k in lexicographic order.
std::vector<std::vector<int>> pivot_patterns(int m, int k);

// Deterministic stream of the k-dimensional subspaces of F_p^m, or of the
// subspaces sharing one pivot pattern.
class SubspaceEnumerator {
 public:
  // Throws kDimOutOfRange unless 0 <= k <= m.
  SubspaceEnumerator(int m, int k, Digit p);
  SubspaceEnumerator(int m, Digit p, std::vector<int> pivots);

  std::optional<Subspace> next();

 private:
  void start_pattern();
  Subspace current() const;

  int m_;
  int k_;
  Digit p_;
  std::vector<std::vector<int>> patterns_;
  std::size_t pattern_index_ = 0;
  // Free cells of the current pattern as (row, col), row-major.
  std::vector<std::pair<int, int>> free_cells_;
  std::vector<Digit> counter_;
  bool exhausted_ = false;
  bool pending_ = false;
};

std::vector<Subspace> enumerate_subspaces(int m, int k, Digit p);

}  // namespace qfc
