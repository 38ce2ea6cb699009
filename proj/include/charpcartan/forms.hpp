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

#ifndef CHARPCARTAN_FORMS_HPP
#define CHARPCARTAN_FORMS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "derivation.hpp"
#include "poly.hpp"

namespace charpcartan {

/// Strictly increasing variable indices (i_1 < ... < i_q) naming dx_{i_1}^...^dx_{i_q}.
using IndexSet = std::vector<std::size_t>;

/// A q-form sum_I f_I dx_I with only strictly increasing I stored and no
/// zero coefficients. A form of degree q > n exists only as zero.
class DiffForm {
 public:
  DiffForm(const PolyRing& ring, std::size_t degree) : ring_(ring), degree_(degree) {}

  static DiffForm zero(const PolyRing& ring, std::size_t degree) { return DiffForm(ring, degree); }

  /// A function viewed as a 0-form.
  static DiffForm function(const Poly& f) {
    DiffForm w(f.ring(), 0);
    w.add_term({}, f);
    return w;
  }

  /// dx_i
  static DiffForm dx(const PolyRing& ring, std::size_t i) {
    DiffForm w(ring, 1);
    w.add_term({i}, Poly::constant(ring, 1));
    return w;
  }

  /// sum_i coeffs[i] dx_i
  static DiffForm one_form(const PolyRing& ring, const std::vector<Poly>& coeffs) {
    if (coeffs.size() != ring.nvars()) throw InvalidArgument("one_form: need one coefficient per variable");
    DiffForm w(ring, 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) w.add_term({i}, coeffs[i]);
    return w;
  }

  /// Adds f * dx_{idx} where idx may be unsorted or repeated; the sign of the
  /// sorting permutation is applied and repeated indices give zero.
  void add_term(IndexSet idx, const Poly& f) {
    require_same_ring(f.ring(), ring_, "DiffForm");
    if (idx.size() != degree_) throw DegreeError("term degree does not match form degree");
    for (auto i : idx) {
      if (i >= ring_.nvars()) throw InvalidArgument("differential index out of range");
    }
    if (f.is_zero()) return;
    bool odd = false;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b]) return;
        if (idx[a] > idx[b]) odd = !odd;
      }
    }
    std::sort(idx.begin(), idx.end());
    Poly g = odd ? -f : f;
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
      coeffs_.emplace(std::move(idx), std::move(g));
    } else {
      it->second += g;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<IndexSet, Poly>& terms() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of dx_I for strictly increasing I.
  Poly coeff(const IndexSet& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Poly(ring_) : it->second;
  }

  /// Coefficients of a 1-form in the basis dx_1, ..., dx_n.
  std::vector<Poly> one_form_coeffs() const {
    if (degree_ != 1) throw DegreeError("expected a 1-form");
    std::vector<Poly> c;
    c.reserve(ring_.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) c.push_back(coeff({i}));
    return c;
  }

  friend DiffForm operator+(const DiffForm& a, const DiffForm& b) {
    a.require_compatible(b);
    DiffForm r = a;
    for (const auto& [idx, f] : b.coeffs_) r.add_term(idx, f);
    return r;
  }

  friend DiffForm operator-(const DiffForm& a, const DiffForm& b) { return a + (-b); }

  DiffForm operator-() const {
    DiffForm r = *this;
    for (auto& [idx, f] : r.coeffs_) f = -f;
    return r;
  }

  friend DiffForm operator*(const Poly& f, const DiffForm& w) {
    require_same_ring(f.ring(), w.ring_, "DiffForm::scale");
    DiffForm r(w.ring_, w.degree_);
    for (const auto& [idx, g] : w.coeffs_) r.add_term(idx, f * g);
    return r;
  }

  DiffForm scaled(Fp c) const {
    DiffForm r(ring_, degree_);
    for (const auto& [idx, g] : coeffs_) r.add_term(idx, g.scaled(c));
    return r;
  }

  /// Applies a coefficientwise map (e.g. pth_root or frobenius).
  template <class F>
  DiffForm map_coeffs(F&& fn) const {
    DiffForm r(ring_, degree_);
    for (const auto& [idx, g] : coeffs_) r.add_term(idx, fn(g));
    return r;
  }

  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_compatible(const DiffForm& o) const {
    require_same_ring(ring_, o.ring_, "DiffForm");
    if (degree_ != o.degree_) throw DegreeError("adding forms of different degree");
  }

  PolyRing ring_;
  std::size_t degree_;
  std::map<IndexSet, Poly> coeffs_;
};

/// df for a function f.
inline DiffForm differential(const Poly& f) {
  DiffForm w(f.ring(), 1);
  for (std::size_t i = 0; i < f.ring().nvars(); ++i) w.add_term({i}, f.partial(i));
  return w;
}

inline DiffForm exterior_derivative(const DiffForm& w) {
  const PolyRing& ring = w.ring();
  DiffForm r(ring, w.degree() + 1);
  for (const auto& [idx, f] : w.terms()) {
    for (std::size_t j = 0; j < ring.nvars(); ++j) {
      Poly df = f.partial(j);
      if (df.is_zero()) continue;
      IndexSet e;
      e.reserve(idx.size() + 1);
      e.push_back(j);
      e.insert(e.end(), idx.begin(), idx.end());
      r.add_term(std::move(e), df);
    }
  }
  return r;
}

inline DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_ring(a.ring(), b.ring(), "wedge");
  DiffForm r(a.ring(), a.degree() + b.degree());
  for (const auto& [ia, f] : a.terms()) {
    for (const auto& [ib, g] : b.terms()) {
      IndexSet e = ia;
      e.insert(e.end(), ib.begin(), ib.end());
      r.add_term(std::move(e), f * g);
    }
  }
  return r;
}

inline bool is_closed(const DiffForm& w) { return exterior_derivative(w).is_zero(); }

/// <D, w> for a 1-form w: sum_i f_i * (coefficient of dx_i).
inline Poly pairing(const Derivation& d, const DiffForm& w) {
  if (w.degree() != 1) throw DegreeError("pairing needs a 1-form, got degree " + std::to_string(w.degree()));
  require_same_ring(d.ring(), w.ring(), "pairing");
  Poly r(w.ring());
  for (const auto& [idx, f] : w.terms()) r += d.coeff(idx[0]) * f;
  return r;
}

/// Value of a 2-form on the coordinate pair (d/dx_i, d/dx_j).
inline Poly evaluate_on_coordinates(const DiffForm& w, std::size_t i, std::size_t j) {
  if (w.degree() != 2) throw DegreeError("expected a 2-form");
  if (i == j) return Poly(w.ring());
  return i < j ? w.coeff({i, j}) : -w.coeff({j, i});
}

/// Renders as a sum of monomial terms `c*x^a*dx^dy`.
inline std::string to_string(const DiffForm& w) {
  if (w.is_zero()) return "0";
  std::string out;
  // Highest differential first, matching polynomial rendering.
  for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
    std::string diff;
    for (auto i : it->first) {
      if (!diff.empty()) diff += '^';
      diff += "d" + w.ring().var(i).name;
    }
    const auto& terms = it->second.terms();
    for (auto t = terms.rbegin(); t != terms.rend(); ++t) {
      Poly mono = Poly::monomial(w.ring(), t->exps, static_cast<std::int64_t>(t->coeff));
      std::string head = mono.is_constant() && t->coeff == 1 ? std::string() : to_string(mono);
      if (!out.empty()) out += " + ";
      if (head.empty()) {
        out += diff.empty() ? "1" : diff;
      } else {
        out += diff.empty() ? head : head + "*" + diff;
      }
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DiffForm& w) { return os << to_string(w); }

}  // namespace charpcartan

#endif  // CHARPCARTAN_FORMS_HPP
