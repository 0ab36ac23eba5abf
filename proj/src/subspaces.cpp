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

#include "qfc/subspaces.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "qfc/error.hpp"

namespace qfc {

MatrixFp::MatrixFp(int rows, int cols, Digit p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * cols, 0) {}

MatrixFp MatrixFp::identity(int n, Digit p) {
  MatrixFp id(n, n, p);
  for (int i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

MatrixFp MatrixFp::from_rows(const std::vector<std::vector<Digit>>& rows, int cols, Digit p) {
  MatrixFp a(static_cast<int>(rows.size()), cols, p);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < cols; ++c) a(r, c) = rows[r].at(c) % p;
  }
  return a;
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp t(cols_, rows_, p_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const {
  MatrixFp out(rows_, rhs.cols_, p_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) {
        out(r, c) = static_cast<Digit>((out(r, c) + a * rhs(k, c)) % p_);
      }
    }
  }
  return out;
}

MatrixFp MatrixFp::select_rows(std::span<const int> which) const {
  MatrixFp out(static_cast<int>(which.size()), cols_, p_);
  for (int i = 0; i < out.rows(); ++i) std::ranges::copy(row(which[i]), out.row(i).begin());
  return out;
}

MatrixFp MatrixFp::stack(const MatrixFp& below) const {
  MatrixFp out(rows_ + below.rows_, cols_, p_);
  std::ranges::copy(data_, out.data_.begin());
  std::ranges::copy(below.data_, out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool MatrixFp::is_zero() const {
  return std::ranges::all_of(data_, [](Digit d) { return d == 0; });
}

bool MatrixFp::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

std::vector<int> rref_in_place(MatrixFp& a) {
  const Digit p = a.p();
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    int pr = -1;
    for (int r = lead; r < a.rows(); ++r) {
      if (a(r, c) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != lead) std::swap_ranges(a.row(pr).begin(), a.row(pr).end(), a.row(lead).begin());
    const std::uint64_t inv = gf::inv_mod(a(lead, c), p);
    for (auto& x : a.row(lead)) x = static_cast<Digit>(x * inv % p);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const std::uint64_t f = a(r, c);
      for (int j = 0; j < a.cols(); ++j) {
        a(r, j) = static_cast<Digit>((a(r, j) + (p - f) * a(lead, j)) % p);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

int rank(const MatrixFp& a) {
  MatrixFp work = a;
  return static_cast<int>(rref_in_place(work).size());
}

std::optional<MatrixFp> inverse(const MatrixFp& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const int n = a.rows();
  MatrixFp aug(n, 2 * n, a.p());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const auto piv = rref_in_place(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  MatrixFp out(n, n, a.p());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

std::vector<Digit> row_times(std::span<const Digit> v, const MatrixFp& a) {
  std::vector<Digit> out(a.cols(), 0);
  const Digit p = a.p();
  for (int r = 0; r < a.rows(); ++r) {
    const std::uint64_t c = v[r];
    if (c == 0) continue;
    for (int j = 0; j < a.cols(); ++j) out[j] = static_cast<Digit>((out[j] + c * a(r, j)) % p);
  }
  return out;
}

Subspace Subspace::zero(int m, Digit p) { return Subspace(MatrixFp(0, m, p), {}); }

Subspace Subspace::full(int m, Digit p) {
  std::vector<int> piv(m);
  for (int i = 0; i < m; ++i) piv[i] = i;
  return Subspace(MatrixFp::identity(m, p), std::move(piv));
}

Subspace Subspace::span(int m, Digit p, const std::vector<std::vector<Digit>>& vectors) {
  return row_space(MatrixFp::from_rows(vectors, m, p));
}

Subspace Subspace::row_space(const MatrixFp& a) {
  MatrixFp work = a;
  auto piv = rref_in_place(work);
  std::vector<int> keep(piv.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
  return Subspace(work.select_rows(keep), std::move(piv));
}

std::uint64_t Subspace::size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < dim(); ++i) s *= p();
  return s;
}

bool Subspace::contains(std::span<const Digit> v) const {
  // In RREF the coefficients of v are its entries at the pivot columns.
  std::vector<Digit> coeff(dim());
  for (int i = 0; i < dim(); ++i) coeff[i] = v[pivots_[i]] % p();
  const auto recon = row_times(coeff, basis_);
  for (int j = 0; j < ambient_dim(); ++j) {
    if (recon[j] != v[j] % p()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis().row(r))) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  return Subspace::row_space(a.basis().stack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const int m = a.ambient_dim();
  const Digit p = a.p();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(m, p);
  // Pairs (c, e) with c.A = e.B are the null space of [A; -B]^T.
  MatrixFp neg_b = b.basis();
  for (int r = 0; r < neg_b.rows(); ++r) {
    for (auto& x : neg_b.row(r)) x = (p - x) % p;
  }
  const Subspace pairs = null_space(a.basis().stack(neg_b).transpose());
  std::vector<std::vector<Digit>> vecs;
  for (int r = 0; r < pairs.dim(); ++r) {
    const auto row = pairs.basis().row(r);
    vecs.push_back(row_times(row.first(a.dim()), a.basis()));
  }
  return Subspace::span(m, p, vecs);
}

Subspace null_space(const MatrixFp& a) {
  MatrixFp work = a;
  const auto piv = rref_in_place(work);
  const int n = a.cols();
  const Digit p = a.p();
  std::vector<bool> is_pivot(n, false);
  for (const int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Digit>> vecs;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Digit> v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - work(static_cast<int>(i), f)) % p;
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, p, vecs);
}

std::vector<std::vector<Digit>> members(const Subspace& h) {
  const int k = h.dim();
  const Digit p = h.p();
  std::vector<std::vector<Digit>> out;
  out.reserve(h.size());
  std::vector<Digit> coeff(k, 0);
  while (true) {
    out.push_back(row_times(coeff, h.basis()));
    int i = k - 1;
    while (i >= 0 && ++coeff[i] == p) coeff[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<std::uint64_t> member_codes(const Subspace& h) {
  const int m = h.ambient_dim();
  const Digit p = h.p();
  auto vecs = members(h);
  std::vector<std::uint64_t> codes;
  codes.reserve(vecs.size());
  for (const auto& v : vecs) {
    std::uint64_t code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + v[i];
    codes.push_back(code);
  }
  return codes;
}

std::uint64_t gaussian_binomial(int m, int k, Digit p) {
  if (k < 0 || k > m) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // g[j] holds [i choose j]_p for the current i; recurrence
  // [i, j] = [i-1, j-1] + p^j [i-1, j].
  std::vector<std::uint64_t> g(k + 1, 0);
  g[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      std::uint64_t term = g[j];
      for (int t = 0; t < j && term != kMax; ++t) term = term > kMax / p ? kMax : term * p;
      const std::uint64_t s = g[j - 1] > kMax - term ? kMax : g[j - 1] + term;
      g[j] = s;
    }
  }
  return g[k];
}

std::vector<std::vector<int>> pivot_patterns(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == m - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

SubspaceEnumerator::SubspaceEnumerator(int m, int k, Digit p) : m_(m), k_(k), p_(p) {
  if (k < 0 || k > m) {
    throw Error(ErrorKind::kDimOutOfRange,
                "subspace dimension " + std::to_string(k) + " outside [0, " + std::to_string(m) + "]");
  }
  patterns_ = pivot_patterns(m, k);
  start_pattern();
}

SubspaceEnumerator::SubspaceEnumerator(int m, Digit p, std::vector<int> pivots)
    : m_(m), k_(static_cast<int>(pivots.size())), p_(p) {
  if (k_ > m || !std::ranges::is_sorted(pivots) ||
      std::ranges::adjacent_find(pivots) != pivots.end() ||
      (!pivots.empty() && (pivots.front() < 0 || pivots.back() >= m))) {
    throw Error(ErrorKind::kDimOutOfRange, "invalid pivot pattern");
  }
  patterns_.push_back(std::move(pivots));
  start_pattern();
}

void SubspaceEnumerator::start_pattern() {
  if (pattern_index_ >= patterns_.size()) {
    exhausted_ = true;
    return;
  }
  const auto& piv = patterns_[pattern_index_];
  std::vector<bool> is_pivot(m_, false);
  for (const int c : piv) is_pivot[c] = true;
  free_cells_.clear();
  for (int i = 0; i < k_; ++i) {
    for (int c = piv[i] + 1; c < m_; ++c) {
      if (!is_pivot[c]) free_cells_.emplace_back(i, c);
    }
  }
  counter_.assign(free_cells_.size(), 0);
}

Subspace SubspaceEnumerator::current() const {
  const auto& piv = patterns_[pattern_index_];
  MatrixFp b(k_, m_, p_);
  for (int i = 0; i < k_; ++i) b(i, piv[i]) = 1;
  for (std::size_t t = 0; t < free_cells_.size(); ++t) {
    b(free_cells_[t].first, free_cells_[t].second) = counter_[t];
  }
  return Subspace(std::move(b), piv);
}

std::optional<Subspace> SubspaceEnumerator::next() {
  if (exhausted_) return std::nullopt;
  Subspace out = current();
  // Advance the free-entry counter, last cell least significant.
  auto i = static_cast<std::ptrdiff_t>(counter_.size()) - 1;
  while (i >= 0 && ++counter_[i] == p_) counter_[i--] = 0;
  if (i < 0) {
    ++pattern_index_;
    start_pattern();
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces(int m, int k, Digit p) {
  SubspaceEnumerator e(m, k, p);
  std::vector<Subspace> out;
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace qfc
