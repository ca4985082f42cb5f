/*
 * Copyright 2026 the ksym developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "ksym/errors.hpp"
#include "ksym/rational.hpp"

namespace ksym {

// Dense matrix over an exact field K. K needs 0/1 construction, +, -, *, /,
// unary -, and ==. Used with Rational and GaussianRational; all elimination
// is plain fraction Gauss with first-nonzero pivoting, so results are
// deterministic.
template <class K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, K(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }
  const K& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& v = at(i, k);
        if (v == K(0)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o.at(k, j) == K(0)) continue;
          r.at(i, j) = r.at(i, j) + v * o.at(k, j);
        }
      }
    return r;
  }
  Mat scaled(const K& s) const {
    Mat r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == K(0))) return false;
    return true;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }
  bool is_skew() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i; j < cols_; ++j)
        if (!(at(i, j) == -at(j, i))) return false;
    return true;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    assert(int(v.size()) == cols_);
    std::vector<K> out(rows_, K(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(at(i, j) == K(0)) && !(v[j] == K(0))) out[i] = out[i] + at(i, j) * v[j];
    return out;
  }

  /// Row echelon in place; returns rank. Column order is never permuted, so
  /// the pivot columns are deterministic.
  int rref() {
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
      int piv = -1;
      for (int r = rank; r < rows_; ++r)
        if (!(at(r, col) == K(0))) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      if (piv != rank)
        for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
      K inv = K(1) / at(rank, col);
      for (int j = col; j < cols_; ++j) at(rank, j) = at(rank, j) * inv;
      for (int r = 0; r < rows_; ++r) {
        if (r == rank || at(r, col) == K(0)) continue;
        K f = at(r, col);
        for (int j = col; j < cols_; ++j) at(r, j) = at(r, j) - f * at(rank, j);
      }
      ++rank;
    }
    return rank;
  }

  int rank() const {
    Mat copy = *this;
    return copy.rref();
  }

  /// Columns span the kernel.
  Mat kernel() const {
    Mat red = *this;
    int rank = red.rref();
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(cols_, false);
    {
      int r = 0;
      for (int c = 0; c < cols_ && r < rank; ++c)
        if (!(red.at(r, c) == K(0))) {
          pivot_col[r] = c;
          is_pivot[c] = true;
          ++r;
        }
    }
    Mat ker(cols_, cols_ - rank);
    int kcol = 0;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      ker.at(c, kcol) = K(1);
      for (int r = 0; r < rank; ++r) ker.at(pivot_col[r], kcol) = -red.at(r, c);
      ++kcol;
    }
    return ker;
  }

  K det() const {
    assert(rows_ == cols_);
    Mat w = *this;
    K d(1);
    for (int col = 0; col < cols_; ++col) {
      int piv = -1;
      for (int r = col; r < rows_; ++r)
        if (!(w.at(r, col) == K(0))) {
          piv = r;
          break;
        }
      if (piv < 0) return K(0);
      if (piv != col) {
        for (int j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(col, j));
        d = -d;
      }
      d = d * w.at(col, col);
      K inv = K(1) / w.at(col, col);
      for (int r = col + 1; r < rows_; ++r) {
        if (w.at(r, col) == K(0)) continue;
        K f = w.at(r, col) * inv;
        for (int j = col; j < cols_; ++j) w.at(r, j) = w.at(r, j) - f * w.at(col, j);
      }
    }
    return d;
  }

  Mat inverse() const {
    assert(rows_ == cols_);
    Mat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = K(1);
    }
    if (aug.rref() != rows_) throw Error(Errc::SingularMatrix, "matrix not invertible");
    Mat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  /// One solution x of Ax = b, or nullopt when inconsistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    assert(int(b.size()) == rows_);
    Mat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    int rank = aug.rref();
    std::vector<K> x(cols_, K(0));
    for (int r = 0; r < rank; ++r) {
      int c = 0;
      while (c <= cols_ && aug.at(r, c) == K(0)) ++c;
      if (c == cols_) return std::nullopt;  // 0 = 1 row
      x[c] = aug.at(r, cols_);
    }
    return x;
  }

 private:
  int rows_, cols_;
  std::vector<K> a_;
};

using QMatrix = Mat<Rational>;

struct SymDiag {
  QMatrix p;                // invertible change of basis
  std::vector<Rational> d;  // p^T * g * p = diag(d)
};

/// Symmetric congruence diagonalization over the rationals.
/// Throws NonSymmetric when g is not symmetric.
SymDiag symmetric_diagonalize(const QMatrix& g);

struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};

/// Sylvester inertia of a symmetric matrix, computed by exact congruence.
Inertia symmetric_inertia(const QMatrix& g);

/// Pfaffian of a skew-symmetric matrix by exact congruence elimination.
/// Zero for odd size; ^2 equals det.
Rational pfaffian(const QMatrix& skew);

std::string matrix_str(const QMatrix& m);

}  // namespace ksym
