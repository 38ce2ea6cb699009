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

#ifndef CHARPCARTAN_CONNECTION_HPP
#define CHARPCARTAN_CONNECTION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cartier.hpp"
#include "derivation.hpp"
#include "forms.hpp"
#include "lie.hpp"
#include "matrix.hpp"

namespace charpcartan {

/// T_X (+) O_X (x) g: pairs (field, fiber element) with the bracket
///   [(D1, a1), (D2, a2)] = ([D1, D2], [a1, a2] + D1(a2) - D2(a1)),
/// fields acting on fiber coordinates.
template <CoordinateLieAlgebra G>
class SemidirectAlgebra {
 public:
  struct Element {
    Derivation field;
    typename G::Element lie;
  };

  explicit SemidirectAlgebra(G fiber) : fiber_(std::move(fiber)) {}

  const G& fiber() const noexcept { return fiber_; }
  const Prime& prime() const noexcept { return fiber_.prime(); }
  const PolyRing& ring() const noexcept { return fiber_.ring(); }

  Element zero() const { return {Derivation::zero(ring()), fiber_.zero()}; }
  Element add(const Element& a, const Element& b) const { return {a.field + b.field, fiber_.add(a.lie, b.lie)}; }
  Element sub(const Element& a, const Element& b) const { return {a.field - b.field, fiber_.sub(a.lie, b.lie)}; }
  Element scale(Fp c, const Element& a) const { return {a.field.scaled(c), fiber_.scale(c, a.lie)}; }
  bool equal(const Element& a, const Element& b) const { return a.field == b.field && fiber_.equal(a.lie, b.lie); }

  /// D acting coordinatewise on an element of O_X (x) g.
  typename G::Element act(const Derivation& d, const typename G::Element& x) const {
    auto c = fiber_.coords(x);
    for (auto& f : c) f = d.apply(f);
    return fiber_.from_coords(c);
  }

  Element bracket(const Element& a, const Element& b) const {
    require_same_ring(a.field.ring(), ring(), "semidirect_bracket");
    require_same_ring(b.field.ring(), ring(), "semidirect_bracket");
    auto lie = fiber_.add(fiber_.bracket(a.lie, b.lie), fiber_.sub(act(a.field, b.lie), act(b.field, a.lie)));
    return {derivation_bracket(a.field, b.field), std::move(lie)};
  }

 private:
  G fiber_;
};

template <CoordinateLieAlgebra G>
typename SemidirectAlgebra<G>::Element semidirect_bracket(const SemidirectAlgebra<G>& alg,
                                                          const typename SemidirectAlgebra<G>::Element& a,
                                                          const typename SemidirectAlgebra<G>::Element& b) {
  return alg.bracket(a, b);
}

/// A g-valued 1-form sum_k w_k (x) b_k, one 1-form per coordinate b_k of g
/// (matrix entries in row-major order for gl_n).
template <CoordinateLieAlgebra G>
class LieValuedForm {
 public:
  LieValuedForm(G alg, std::vector<DiffForm> components)
      : alg_(std::move(alg)), comps_(std::move(components)) {
    if (comps_.size() != alg_.dim()) throw AlgebraMismatch("need one 1-form per basis element");
    for (const auto& w : comps_) {
      require_same_ring(w.ring(), alg_.ring(), "LieValuedForm");
      if (w.degree() != 1) throw DegreeError("Lie-valued form components must be 1-forms");
    }
  }

  const G& algebra() const noexcept { return alg_; }
  const PolyRing& ring() const noexcept { return alg_.ring(); }
  const std::vector<DiffForm>& components() const noexcept { return comps_; }

  /// w(D) in O_X (x) g.
  typename G::Element evaluate(const Derivation& d) const {
    std::vector<Poly> c;
    c.reserve(comps_.size());
    for (const auto& w : comps_) c.push_back(pairing(d, w));
    return alg_.from_coords(c);
  }

 private:
  G alg_;
  std::vector<DiffForm> comps_;
};

/// g-valued 2-form, one 2-form per coordinate of g.
struct Curvature2Form {
  std::vector<DiffForm> components;

  bool is_zero() const {
    for (const auto& w : components) {
      if (!w.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Curvature2Form&, const Curvature2Form&) = default;
};

/// psi = dw + 1/2 [w, w], with [w, w] = sum_{k,l} (w_k ^ w_l) (x) [b_k, b_l].
template <CoordinateLieAlgebra G>
Curvature2Form curvature_form(const LieValuedForm<G>& w) {
  const G& alg = w.algebra();
  const PolyRing& ring = w.ring();
  const std::size_t d = alg.dim();
  const auto& comps = w.components();
  std::vector<DiffForm> sq(d, DiffForm(ring, 2));
  auto basis = [&](std::size_t k) {
    std::vector<Poly> c(d, Poly(ring));
    c[k] = Poly::constant(ring, 1);
    return alg.from_coords(c);
  };
  for (std::size_t k = 0; k < d; ++k) {
    if (comps[k].is_zero()) continue;
    for (std::size_t l = 0; l < d; ++l) {
      if (comps[l].is_zero()) continue;
      DiffForm kl = wedge(comps[k], comps[l]);
      if (kl.is_zero()) continue;
      auto br = alg.coords(alg.bracket(basis(k), basis(l)));
      for (std::size_t m = 0; m < d; ++m) {
        if (!br[m].is_zero()) sq[m] = sq[m] + br[m] * kl;
      }
    }
  }
  const Fp half = ring.prime().inv(2);
  Curvature2Form psi;
  psi.components.reserve(d);
  for (std::size_t m = 0; m < d; ++m) {
    psi.components.push_back(exterior_derivative(comps[m]) + sq[m].scaled(half));
  }
  return psi;
}

/// Connection d + A on O_X^n, stored as A_i = A(d/dx_i) for each coordinate.
class ConnMatrix {
 public:
  ConnMatrix(const PolyRing& ring, std::size_t n, std::vector<PolyMatrix> per_coordinate)
      : ring_(ring), n_(n), a_(std::move(per_coordinate)) {
    if (a_.size() != ring.nvars()) throw InvalidArgument("need one matrix per coordinate field");
    for (const auto& m : a_) {
      require_same_ring(m.ring(), ring, "ConnMatrix");
      if (m.rows() != n || m.cols() != n) throw InvalidArgument("connection matrix has wrong rank");
    }
  }

  /// From an n x n grid of 1-forms.
  static ConnMatrix from_forms(const PolyRing& ring, const std::vector<std::vector<DiffForm>>& grid) {
    const std::size_t n = grid.size();
    std::vector<PolyMatrix> a(ring.nvars(), PolyMatrix(ring, n, n));
    for (std::size_t r = 0; r < n; ++r) {
      if (grid[r].size() != n) throw InvalidArgument("connection matrix must be square");
      for (std::size_t c = 0; c < n; ++c) {
        const DiffForm& w = grid[r][c];
        require_same_ring(w.ring(), ring, "ConnMatrix");
        if (w.degree() != 1) throw DegreeError("connection entries must be 1-forms");
        for (std::size_t i = 0; i < ring.nvars(); ++i) a[i](r, c) = w.coeff({i});
      }
    }
    return ConnMatrix(ring, n, std::move(a));
  }

  static ConnMatrix from_lie_form(const LieValuedForm<MatrixLieAlgebra>& w) {
    const std::size_t n = w.algebra().rank();
    std::vector<std::vector<DiffForm>> grid(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) grid[r].push_back(w.components()[r * n + c]);
    }
    return from_forms(w.ring(), grid);
  }

  LieValuedForm<MatrixLieAlgebra> to_lie_form() const {
    std::vector<DiffForm> comps;
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        DiffForm w(ring_, 1);
        for (std::size_t i = 0; i < a_.size(); ++i) w.add_term({i}, a_[i](r, c));
        comps.push_back(std::move(w));
      }
    }
    return LieValuedForm<MatrixLieAlgebra>(MatrixLieAlgebra(ring_, n_), std::move(comps));
  }

  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return n_; }
  const PolyMatrix& coordinate_matrix(std::size_t i) const { return a_.at(i); }

  /// A(D) = sum_i D_i A_i
  PolyMatrix evaluate(const Derivation& d) const {
    require_same_ring(d.ring(), ring_, "ConnMatrix::evaluate");
    PolyMatrix m(ring_, n_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!d.coeff(i).is_zero()) m = m + d.coeff(i) * a_[i];
    }
    return m;
  }

  /// nabla_D(v) = D(v) + A(D) v for a column vector v.
  PolyMatrix covariant(const Derivation& d, const PolyMatrix& v) const {
    return v.map([&](const Poly& f) { return d.apply(f); }) + evaluate(d) * v;
  }

 private:
  PolyRing ring_;
  std::size_t n_;
  std::vector<PolyMatrix> a_;
};

/// Curvature of d + A on coordinate pairs: d_i(A_j) - d_j(A_i) + [A_i, A_j].
inline Curvature2Form curvature_operator(const ConnMatrix& a) {
  const PolyRing& ring = a.ring();
  const std::size_t n = a.rank();
  std::vector<DiffForm> comps(n * n, DiffForm(ring, 2));
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    for (std::size_t j = i + 1; j < ring.nvars(); ++j) {
      const PolyMatrix& ai = a.coordinate_matrix(i);
      const PolyMatrix& aj = a.coordinate_matrix(j);
      PolyMatrix r = aj.map([&](const Poly& f) { return f.partial(i); }) -
                     ai.map([&](const Poly& f) { return f.partial(j); }) + (ai * aj - aj * ai);
      for (std::size_t k = 0; k < n * n; ++k) comps[k].add_term({i, j}, r.entries()[k]);
    }
  }
  return {std::move(comps)};
}

/// nabla_D^k applied to a column vector.
inline PolyMatrix covariant_power(const ConnMatrix& a, const Derivation& d, PolyMatrix v, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) v = a.covariant(d, v);
  return v;
}

/// (nabla_D^p - nabla_{D^[p]})(v)
inline PolyMatrix p_curvature_apply(const ConnMatrix& a, const Derivation& d, const PolyMatrix& v) {
  return covariant_power(a, d, v, a.ring().p()) - a.covariant(derivation_p_power(d), v);
}

/// Matrix of nabla_D^p - nabla_{D^[p]}, built column by column from the
/// standard basis vectors.
inline PolyMatrix p_curvature_operator(const ConnMatrix& a, const Derivation& d) {
  require_same_ring(a.ring(), d.ring(), "p_curvature_operator");
  const std::size_t n = a.rank();
  PolyMatrix out(a.ring(), n, n);
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix e(a.ring(), n, 1);
    e(c, 0) = Poly::constant(a.ring(), 1);
    PolyMatrix col = p_curvature_apply(a, d, e);
    for (std::size_t r = 0; r < n; ++r) out(r, c) = col(r, 0);
  }
  return out;
}

/// w(D)^[p] - w(D^[p]) + sum s_i(D, w(D))/i, the Jacobson coefficients taken
/// in the semidirect algebra T_X (+) O_X (x) g.
template <CoordinateLieAlgebra G>
typename G::Element p_curvature_at(const LieValuedForm<G>& w, const Derivation& d) {
  const G& alg = w.algebra();
  auto wd = w.evaluate(d);
  SemidirectAlgebra<G> s(alg);
  typename SemidirectAlgebra<G>::Element field{d, alg.zero()};
  typename SemidirectAlgebra<G>::Element fiber{Derivation::zero(w.ring()), wd};
  auto corr = jacobson_correction(s, field, fiber);
  if (!corr.field.is_zero()) {
    throw InvalidArgument("Jacobson correction left a nonzero field component");
  }
  return alg.add(alg.sub(alg.p_power(wd), w.evaluate(derivation_p_power(d))), corr.lie);
}

/// p-curvature values on the coordinate fields d/dx_i. `formal` is set when
/// the form is not flat, where the expression has no intrinsic meaning.
template <CoordinateLieAlgebra G>
struct PCurvature {
  G algebra;
  std::vector<typename G::Element> values;
  bool formal = false;

  bool is_zero() const {
    for (const auto& v : values) {
      if (!algebra.equal(v, algebra.zero())) return false;
    }
    return true;
  }

  /// Value at an arbitrary field D = sum f_i d_i, by Frobenius-semilinear
  /// extension: sum f_i^p * value_i.
  typename G::Element at(const Derivation& d) const {
    auto acc = algebra.zero();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!d.coeff(i).is_zero()) acc = algebra.add(acc, algebra.scale_by(d.coeff(i).frobenius(), values[i]));
    }
    return acc;
  }
};

template <CoordinateLieAlgebra G>
PCurvature<G> p_curvature_form(const LieValuedForm<G>& w) {
  PCurvature<G> out{w.algebra(), {}, !curvature_form(w).is_zero()};
  for (std::size_t i = 0; i < w.ring().nvars(); ++i) {
    out.values.push_back(p_curvature_at(w, Derivation::coordinate(w.ring(), i)));
  }
  return out;
}

/// Rank-one abelian case: <D, w>^p - <F*(D), C(w)> with the Cartier term
/// pulled back along Frobenius.
inline Poly p_curvature_abelian(const DiffForm& w, const Derivation& d) {
  if (w.degree() != 1) throw DegreeError("p_curvature_abelian needs a 1-form");
  if (!is_closed(w)) throw NotClosed("p_curvature_abelian needs a closed 1-form");
  return pairing(d, w).frobenius() - cartier_pairing_expanded(d, w);
}

/// d^{(+)2} + [[0, chi], [0, 0]], the connection attached to a G_a-valued form.
inline ConnMatrix ga_connection(const DiffForm& chi) {
  const PolyRing& ring = chi.ring();
  DiffForm zero(ring, 1);
  return ConnMatrix::from_forms(ring, {{zero, chi}, {zero, zero}});
}

/// Checks that the p-curvature of d + [[0, chi], [0, 0]] at every coordinate
/// field is -[[0, <F*(d_i), C(chi)>], [0, 0]] (Cartier term pulled back).
inline bool lemma_ga_check(const DiffForm& chi) {
  if (chi.degree() != 1) throw DegreeError("lemma_ga_check needs a 1-form");
  if (!is_closed(chi)) throw NotClosed("lemma_ga_check needs a closed 1-form");
  const PolyRing& ring = chi.ring();
  ConnMatrix conn = ga_connection(chi);
  DiffForm c = cartier(chi).value;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    PolyMatrix lhs = p_curvature_operator(conn, Derivation::coordinate(ring, i));
    PolyMatrix rhs = PolyMatrix::unit(ring, 2, 0, 1, -c.coeff({i}).frobenius());
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace charpcartan

#endif  // CHARPCARTAN_CONNECTION_HPP
