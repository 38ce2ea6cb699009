/*
   Copyright 2026 The charpcartan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHARPCARTAN_MATRIX_HPP
#define CHARPCARTAN_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "poly.hpp"

namespace charpcartan {

/// Dense rows x cols matrix over a coordinate ring, row-major.
class PolyMatrix {
 public:
  PolyMatrix(const PolyRing& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Poly(ring)) {}

  static PolyMatrix zero(const PolyRing& ring, std::size_t n) { return PolyMatrix(ring, n, n); }

  static PolyMatrix identity(const PolyRing& ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ring, 1);
    return m;
  }

  /// E_{ij} scaled by f.
  static PolyMatrix unit(const PolyRing& ring, std::size_t n, std::size_t i, std::size_t j, const Poly& f) {
    PolyMatrix m(ring, n, n);
    m(i, j) = f;
    return m;
  }

  static PolyMatrix from_rows(const PolyRing& ring, const std::vector<std::vector<Poly>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    PolyMatrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) {
        require_same_ring(rows[i][j].ring(), ring, "PolyMatrix");
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
  const Poly& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

  const std::vector<Poly>& entries() const noexcept { return a_; }

  bool is_zero() const {
    for (const auto& e : a_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
    x.require_same_shape(y);
    PolyMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }

  friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    x.require_same_shape(y);
    PolyMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }

  PolyMatrix operator-() const {
    PolyMatrix r = *this;
    for (auto& e : r.a_) e = -e;
    return r;
  }

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    require_same_ring(x.ring_, y.ring_, "matrix product");
    if (x.cols_ != y.rows_) throw InvalidArgument("matrix product: inner dimensions differ");
    PolyMatrix r(x.ring_, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Poly& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          const Poly& ykj = y(k, j);
          if (!ykj.is_zero()) r(i, j) += xik * ykj;
        }
      }
    }
    return r;
  }

  friend PolyMatrix operator*(const Poly& f, const PolyMatrix& m) {
    require_same_ring(f.ring(), m.ring_, "matrix scale");
    PolyMatrix r = m;
    for (auto& e : r.a_) e = f * e;
    return r;
  }

  PolyMatrix scaled(Fp c) const {
    PolyMatrix r = *this;
    for (auto& e : r.a_) e = e.scaled(c);
    return r;
  }

  PolyMatrix pow(std::uint64_t e) const {
    if (!square()) throw InvalidArgument("power of a non-square matrix");
    PolyMatrix result = identity(ring_, rows_);
    PolyMatrix base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  template <class F>
  PolyMatrix map(F&& fn) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fn(a_[k]);
    return r;
  }

  /// Laplace expansion along the first row; intended for the small ranks
  /// used on model spaces (division-free, so valid over Laurent rings).
  Poly determinant() const {
    if (!square()) throw InvalidArgument("determinant of a non-square matrix");
    if (rows_ == 0) return Poly::constant(ring_, 1);
    if (rows_ == 1) return a_[0];
    Poly det(ring_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(0, j).is_zero()) continue;
      PolyMatrix minor(ring_, rows_ - 1, cols_ - 1);
      for (std::size_t i = 1; i < rows_; ++i) {
        for (std::size_t k = 0, c = 0; k < cols_; ++k) {
          if (k == j) continue;
          minor(i - 1, c++) = (*this)(i, k);
        }
      }
      Poly term = (*this)(0, j) * minor.determinant();
      det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
  }

  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    return x.ring_ == y.ring_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  void require_same_shape(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "matrix");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shapes differ");
  }

  PolyRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> a_;
};

inline std::string to_string(const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != 0) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ", ";
      out += to_string(m(i, j));
    }
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) { return os << to_string(m); }

}  // namespace charpcartan

#endif  // CHARPCARTAN_MATRIX_HPP
