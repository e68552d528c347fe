// Copyright 2026 The Authors.
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

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "osforge/rational.hpp"

namespace osforge {

// Dense exact-rational linear algebra. Desk-scale matrices only; everything
// is plain Gaussian elimination with the first nonzero entry as pivot.

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

namespace detail {

// Reduces rows in place to row echelon form; returns pivot column per kept
// row. Rows are swapped, zero rows sink to the bottom.
inline std::vector<std::size_t> echelonize(RationalMatrix& rows) {
  std::vector<std::size_t> pivot_cols;
  if (rows.empty()) return pivot_cols;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace detail

/// Rank of the row span. Consumes its argument.
inline std::size_t rank_of(RationalMatrix rows) {
  return detail::echelonize(rows).size();
}

/// True iff v lies in the row span of rows.
inline bool in_row_span(RationalMatrix rows, RationalRow v) {
  const auto pivots = detail::echelonize(rows);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t c = pivots[r];
    if (v[c] == 0) continue;
    const Rational f = v[c];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
  }
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

struct InverseWitness {
  Rational det;
  RationalMatrix inverse;
};

/// Exact determinant and inverse of a square matrix via Gauss-Jordan.
/// Throws std::invalid_argument if the matrix is singular or not square.
inline InverseWitness invert(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("invert: matrix not square");
  RationalMatrix work(n, RationalRow(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = a[i][j];
    work[i][n + i] = 1;
  }
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && work[pivot][c] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("invert: singular matrix");
    if (pivot != c) {
      std::swap(work[c], work[pivot]);
      det = -det;
    }
    det *= work[c][c];
    const Rational inv = Rational(1) / work[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) work[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || work[i][c] == 0) continue;
      const Rational f = work[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) work[i][j] -= f * work[c][j];
    }
  }
  InverseWitness w;
  w.det = det;
  w.inverse.assign(n, RationalRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.inverse[i][j] = work[i][n + j];
  return w;
}

inline RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  RationalMatrix c(n, RationalRow(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matmul: shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

inline bool is_identity(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace osforge
