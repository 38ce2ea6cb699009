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

#ifndef CHARPCARTAN_LIE_HPP
#define CHARPCARTAN_LIE_HPP

#include <concepts>
#include <cstddef>
#include <vector>

#include "fp.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace charpcartan {

/// A Lie algebra over F_p presented through its operations. Elements are
/// plain values; the algebra object owns the structure.
template <class A>
concept LieAlgebra = requires(const A& alg, const typename A::Element& x, Fp c) {
  { alg.zero() } -> std::convertible_to<typename A::Element>;
  { alg.add(x, x) } -> std::convertible_to<typename A::Element>;
  { alg.sub(x, x) } -> std::convertible_to<typename A::Element>;
  { alg.scale(c, x) } -> std::convertible_to<typename A::Element>;
  { alg.bracket(x, x) } -> std::convertible_to<typename A::Element>;
  { alg.equal(x, x) } -> std::convertible_to<bool>;
  { alg.prime() } -> std::convertible_to<Prime>;
};

template <class A>
concept RestrictedLieAlgebra = LieAlgebra<A> && requires(const A& alg, const typename A::Element& x) {
  { alg.p_power(x) } -> std::convertible_to<typename A::Element>;
};

/// O_X (x) g for a finite-dimensional restricted g: elements carry one
/// coordinate in O_X per basis vector, and the structure extends O_X-linearly.
template <class A>
concept CoordinateLieAlgebra =
    RestrictedLieAlgebra<A> &&
    requires(const A& alg, const typename A::Element& x, const std::vector<Poly>& c, const Poly& f,
             const PolyRing& r) {
      { alg.ring() } -> std::convertible_to<const PolyRing&>;
      { alg.dim() } -> std::convertible_to<std::size_t>;
      { alg.coords(x) } -> std::convertible_to<std::vector<Poly>>;
      { alg.from_coords(c) } -> std::convertible_to<typename A::Element>;
      { alg.scale_by(f, x) } -> std::convertible_to<typename A::Element>;
      { alg.with_ring(r) } -> std::convertible_to<A>;
    };

/// s_1(v,u), ..., s_{p-1}(v,u): s_i is the coefficient of t^{i-1} in
/// ad(v t + u)^{p-1}(v), expanded in g[t] with t central.
template <LieAlgebra A>
std::vector<typename A::Element> jacobson_coefficients(const A& alg, const typename A::Element& v,
                                                       const typename A::Element& u) {
  using E = typename A::Element;
  const std::size_t p = alg.prime().value();
  std::vector<E> w{v};  // w[k] = coefficient of t^k
  for (std::size_t step = 0; step + 1 < p; ++step) {
    std::vector<E> next(w.size() + 1, alg.zero());
    for (std::size_t k = 0; k < w.size(); ++k) {
      next[k] = alg.add(next[k], alg.bracket(u, w[k]));
      next[k + 1] = alg.add(next[k + 1], alg.bracket(v, w[k]));
    }
    w = std::move(next);
  }
  // The top coefficient is ad(v)^{p-1}(v) = 0.
  w.resize(p - 1, alg.zero());
  return w;
}

template <LieAlgebra A>
std::vector<typename A::Element> si_coefficients(const A& alg, const typename A::Element& v,
                                                 const typename A::Element& u) {
  return jacobson_coefficients(alg, v, u);
}

/// sum_{i=1}^{p-1} s_i(v,u) / i
template <LieAlgebra A>
typename A::Element jacobson_correction(const A& alg, const typename A::Element& v,
                                        const typename A::Element& u) {
  const Prime& p = alg.prime();
  auto s = jacobson_coefficients(alg, v, u);
  auto acc = alg.zero();
  for (std::size_t i = 1; i < p.value(); ++i) {
    acc = alg.add(acc, alg.scale(p.inv(i), s[i - 1]));
  }
  return acc;
}

/// (v + u)^[p] == v^[p] + u^[p] + sum s_i(v,u)/i
template <RestrictedLieAlgebra A>
bool jacobson_check(const A& alg, const typename A::Element& v, const typename A::Element& u) {
  auto lhs = alg.p_power(alg.add(v, u));
  auto rhs = alg.add(alg.add(alg.p_power(v), alg.p_power(u)), jacobson_correction(alg, v, u));
  return alg.equal(lhs, rhs);
}

/// sum s_i(v, u - v)/i == -sum s_i(-v, u)/i
template <LieAlgebra A>
bool l1123_check(const A& alg, const typename A::Element& v, const typename A::Element& u) {
  auto neg_v = alg.sub(alg.zero(), v);
  auto lhs = jacobson_correction(alg, v, alg.sub(u, v));
  auto rhs = alg.sub(alg.zero(), jacobson_correction(alg, neg_v, u));
  return alg.equal(lhs, rhs);
}

/// (ad v)^p (w) == ad(v^[p]) (w)
template <RestrictedLieAlgebra A>
bool ad_power_check(const A& alg, const typename A::Element& v, const typename A::Element& w) {
  auto x = w;
  for (std::size_t k = 0; k < alg.prime().value(); ++k) x = alg.bracket(v, x);
  return alg.equal(x, alg.bracket(alg.p_power(v), w));
}

/// (a v)^[p] == a^p v^[p] for a in O_X.
template <CoordinateLieAlgebra A>
bool homogeneity_check(const A& alg, const Poly& a, const typename A::Element& v) {
  return alg.equal(alg.p_power(alg.scale_by(a, v)), alg.scale_by(a.frobenius(), alg.p_power(v)));
}

/// gl_n over a coordinate ring, with v^[p] = v^p.
class MatrixLieAlgebra {
 public:
  using Element = PolyMatrix;

  MatrixLieAlgebra(PolyRing ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
    if (n == 0) throw InvalidArgument("matrix Lie algebra needs rank >= 1");
  }

  const Prime& prime() const noexcept { return ring_.prime(); }
  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return n_; }
  std::size_t dim() const noexcept { return n_ * n_; }

  MatrixLieAlgebra with_ring(const PolyRing& r) const { return MatrixLieAlgebra(r, n_); }

  Element zero() const { return PolyMatrix::zero(ring_, n_); }
  Element add(const Element& a, const Element& b) const { return check(a) + check(b); }
  Element sub(const Element& a, const Element& b) const { return check(a) - check(b); }
  Element scale(Fp c, const Element& a) const { return check(a).scaled(c); }
  Element scale_by(const Poly& f, const Element& a) const { return f * check(a); }
  Element bracket(const Element& a, const Element& b) const {
    check(a);
    check(b);
    return a * b - b * a;
  }
  Element p_power(const Element& a) const { return check(a).pow(ring_.p()); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::vector<Poly> coords(const Element& a) const { return check(a).entries(); }

  Element from_coords(const std::vector<Poly>& c) const {
    if (c.size() != dim()) throw AlgebraMismatch("coordinate vector has wrong length");
    PolyMatrix m(ring_, n_, n_);
    for (std::size_t k = 0; k < c.size(); ++k) m(k / n_, k % n_) = c[k];
    return m;
  }

  Element basis(std::size_t k) const { return PolyMatrix::unit(ring_, n_, k / n_, k % n_, Poly::constant(ring_, 1)); }

  friend bool operator==(const MatrixLieAlgebra& a, const MatrixLieAlgebra& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_;
  }

 private:
  const Element& check(const Element& a) const {
    if (a.rows() != n_ || a.cols() != n_ || !(a.ring() == ring_)) {
      throw AlgebraMismatch("matrix is not an element of this gl_" + std::to_string(n_));
    }
    return a;
  }

  PolyRing ring_;
  std::size_t n_;
};

/// v^[p] for any restricted algebra.
template <RestrictedLieAlgebra A>
typename A::Element p_power(const A& alg, const typename A::Element& v) {
  return alg.p_power(v);
}

}  // namespace charpcartan

#endif  // CHARPCARTAN_LIE_HPP
