/*
 * Copyright 2026 The gsa Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gsa/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsa {

FMatrix FMatrix::from_columns(const PrimeField& f,
                              const std::vector<std::vector<std::uint64_t>>& cols,
                              int rows) {
  FMatrix m(f, rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

FMatrix FMatrix::transpose() const {
  FMatrix t(f_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FMatrix FMatrix::multiply(const FMatrix& rhs) const {
  if (cols_ != rhs.rows_ || f_ != rhs.f_)
    throw std::invalid_argument("multiply: shape or field mismatch");
  FMatrix out(f_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) = f_.add(out.at(i, j), f_.mul(v, rhs.at(k, j)));
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> FMatrix::row(int r) const {
  std::vector<std::uint64_t> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

RrefResult rref(const FMatrix& m) {
  FMatrix r = m;
  const PrimeField& f = r.field();
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int p = -1;
    for (int i = lead; i < r.rows(); ++i) {
      if (r.at(i, col) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != lead) {
      for (int c = 0; c < r.cols(); ++c) std::swap(r.at(p, c), r.at(lead, c));
    }
    std::uint64_t inv = f.inv(r.at(lead, col));
    for (int c = col; c < r.cols(); ++c) r.at(lead, c) = f.mul(inv, r.at(lead, c));
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      std::uint64_t factor = r.at(i, col);
      if (factor == 0) continue;
      for (int c = col; c < r.cols(); ++c) {
        r.at(i, c) = f.sub(r.at(i, c), f.mul(factor, r.at(lead, c)));
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

int rank(const FMatrix& m) {
  return static_cast<int>(rref(m).pivot_cols.size());
}

std::vector<std::vector<std::uint64_t>> left_null_space(const FMatrix& m) {
  // v*m = 0  <=>  m^T v^T = 0, so take the kernel of the transpose.
  const PrimeField& f = m.field();
  const int n = m.rows();  // dimension of v
  RrefResult rr = rref(m.transpose());
  const FMatrix& red = rr.reduced;
  const std::vector<int>& pivots = rr.pivot_cols;

  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::vector<std::uint64_t>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = f.neg(red.at(static_cast<int>(i), free));
    }
    // Scale the leading nonzero entry to 1.
    for (int j = 0; j < n; ++j) {
      if (v[j] != 0) {
        std::uint64_t inv = f.inv(v[j]);
        for (int t = j; t < n; ++t) v[t] = f.mul(inv, v[t]);
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FMatrix solve_square(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("solve_square: matrix not square");
  if (a.rows() != b.rows() || a.field() != b.field())
    throw std::invalid_argument("solve_square: shape or field mismatch");
  const PrimeField& f = a.field();
  const int n = a.rows();
  FMatrix aug(f, n, n + b.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, n + j) = b.at(i, j);
  }
  RrefResult rr = rref(aug);
  // Invertible iff the first n columns are all pivots.
  if (static_cast<int>(rr.pivot_cols.size()) < n || rr.pivot_cols[n - 1] != n - 1)
    throw SingularMatrixError("solve_square: singular matrix");
  FMatrix x(f, n, b.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(i, j) = rr.reduced.at(i, n + j);
  return x;
}

FMatrix invert(const FMatrix& a) {
  return solve_square(a, FMatrix::identity(a.field(), a.rows()));
}

std::vector<std::uint64_t> row_times_matrix(const PrimeField& f,
                                            const std::vector<std::uint64_t>& v,
                                            const FMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("row_times_matrix: length mismatch");
  std::vector<std::uint64_t> out(m.cols(), 0);
  for (int r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    for (int c = 0; c < m.cols(); ++c) {
      out[c] = f.add(out[c], f.mul(v[r], m.at(r, c)));
    }
  }
  return out;
}

bool proportional(const PrimeField& f, const std::vector<std::uint64_t>& u,
                  const std::vector<std::uint64_t>& v) {
  if (u.size() != v.size()) return false;
  std::uint64_t c = 0;  // unknown scale
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] == 0) != (v[i] == 0)) return false;
    if (u[i] == 0) continue;
    std::uint64_t ratio = f.mul(u[i], f.inv(v[i]));
    if (c == 0) {
      c = ratio;
    } else if (c != ratio) {
      return false;
    }
  }
  return true;  // all-zero pairs are proportional too
}

}  // namespace gsa
