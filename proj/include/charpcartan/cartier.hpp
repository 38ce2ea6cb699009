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

#ifndef CHARPCARTAN_CARTIER_HPP
#define CHARPCARTAN_CARTIER_HPP

#include <cstddef>
#include <vector>

#include "derivation.hpp"
#include "forms.hpp"
#include "poly.hpp"

namespace charpcartan {

// The Frobenius twist X^(1) of a model space over F_p is the same scheme;
// a 1-form on the twist is stored on the same ring with the twisted
// coordinate y_i written as x_i. Pulling a twisted function back to X along
// relative Frobenius is then Poly::frobenius().

/// C(w) for a closed 1-form, as a 1-form on the twist.
struct CartierResult {
  DiffForm value;
};

/// Cartier operator on closed 1-forms. For a coordinate field d_i (whose
/// p-power vanishes) Katz's formula reduces to
///   <F*d_i, C(w)> = -d_i^{p-1}(<d_i, w>),
/// a p-th power whenever w is closed; its p-th root is the i-th coefficient.
inline CartierResult cartier(const DiffForm& w) {
  if (w.degree() != 1) throw DegreeError("Cartier operator is defined on 1-forms");
  if (!is_closed(w)) throw NotClosed("Cartier operator requires a closed 1-form");
  const PolyRing& ring = w.ring();
  const std::size_t p = ring.p();
  DiffForm out(ring, 1);
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    Poly f = w.coeff({i});
    if (f.is_zero()) continue;
    Derivation d = Derivation::coordinate(ring, i);
    Poly h = -d.apply_n(f, p - 1);
    if (!h.in_frobenius_subring()) {
      throw InternalCartierError("closed form produced a non-p-th-power Cartier coefficient");
    }
    out.add_term({i}, h.pth_root());
  }
  return {std::move(out)};
}

/// <F*(D), C(w)> pulled back to X, i.e. sum_i D_i^p * C(w)_i^p.
inline Poly cartier_pairing_expanded(const Derivation& d, const DiffForm& w) {
  require_same_ring(d.ring(), w.ring(), "cartier_pairing");
  DiffForm c = cartier(w).value;
  Poly r(w.ring());
  for (std::size_t i = 0; i < w.ring().nvars(); ++i) {
    Poly ci = c.coeff({i});
    if (!ci.is_zero()) r += d.coeff(i).frobenius() * ci.frobenius();
  }
  return r;
}

/// Katz's expression <D^[p], w> - D^{p-1}(<D, w>), valid for any field D.
inline Poly katz_cartier_pairing(const Derivation& d, const DiffForm& w) {
  return pairing(derivation_p_power(d), w) - d.apply_n(pairing(d, w), w.ring().p() - 1);
}

/// Membership in the fixed points of C: closed with C(w) = w on the twist.
inline bool is_C_fixed(const DiffForm& w) {
  if (w.degree() != 1 || !is_closed(w)) return false;
  return cartier(w).value == w;
}

/// Membership in the kernel of C: closed with C(w) = 0.
inline bool is_C_kernel(const DiffForm& w) {
  if (w.degree() != 1 || !is_closed(w)) return false;
  return cartier(w).value.is_zero();
}

/// du / u for a unit u.
inline DiffForm dlog(const Poly& u) { return u.inverse_unit() * differential(u); }

}  // namespace charpcartan

#endif  // CHARPCARTAN_CARTIER_HPP
