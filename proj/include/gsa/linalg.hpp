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

#ifndef GSA_LINALG_HPP_
#define GSA_LINALG_HPP_

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gsa/field.hpp"

namespace gsa {

/// Dense row-major matrix over a prime field. Entries are canonical residues;
/// all arithmetic is exact. Plan matrices are at most U x C(K-1,S) for small
/// K, so nothing sparse is needed.
class FMatrix {
 public:
  FMatrix(const PrimeField& f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

  /// Row-major initializer with signed entries (reduced into the field).
  FMatrix(const PrimeField& f, int rows, int cols,
          std::initializer_list<long long> entries)
      : FMatrix(f, rows, cols) {
    std::size_t i = 0;
    for (long long v : entries) a_[i++] = f.from_signed(v);
  }

  static FMatrix identity(const PrimeField& f, int n) {
    FMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given row-major U-vectors.
  static FMatrix from_columns(const PrimeField& f,
                              const std::vector<std::vector<std::uint64_t>>& cols,
                              int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return f_; }

  std::uint64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  FMatrix transpose() const;
  FMatrix multiply(const FMatrix& rhs) const;

  std::vector<std::uint64_t> row(int r) const;

  bool operator==(const FMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
  }

 private:
  PrimeField f_;
  int rows_;
  int cols_;
  std::vector<std::uint64_t> a_;
};

struct RrefResult {
  FMatrix reduced;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form with leading-1 pivots (first-nonzero pivoting;
/// exact arithmetic has no magnitude concerns).
RrefResult rref(const FMatrix& m);

int rank(const FMatrix& m);

/// Basis of the left null space {v : v*m = 0}, via rref of the transpose.
/// Canonical: free variables set to 1 in ascending index order, leading
/// nonzero entry scaled to 1. Any scalar multiple is equally valid
/// mathematically; this fixes a deterministic representative.
std::vector<std::vector<std::uint64_t>> left_null_space(const FMatrix& m);

/// Solves a*x = b for square invertible a. Throws SingularMatrixError.
FMatrix solve_square(const FMatrix& a, const FMatrix& b);

/// Inverse of a square matrix. Throws SingularMatrixError.
FMatrix invert(const FMatrix& a);

/// v * m for a row vector v (length m.rows()).
std::vector<std::uint64_t> row_times_matrix(const PrimeField& f,
                                            const std::vector<std::uint64_t>& v,
                                            const FMatrix& m);

/// True when u = c*v for some nonzero scalar c (projective equality).
bool proportional(const PrimeField& f, const std::vector<std::uint64_t>& u,
                  const std::vector<std::uint64_t>& v);

}  // namespace gsa

#endif  // GSA_LINALG_HPP_
