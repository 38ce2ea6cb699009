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

#ifndef CHARPCARTAN_DERIVATION_HPP
#define CHARPCARTAN_DERIVATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "poly.hpp"

namespace charpcartan {

/// Vector field sum_i f_i d/dx_i on a coordinate ring.
class Derivation {
 public:
  explicit Derivation(const PolyRing& ring) : ring_(ring), coeffs_(ring.nvars(), Poly(ring)) {}

  Derivation(const PolyRing& ring, std::vector<Poly> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_.nvars()) {
      throw InvalidArgument("derivation needs one coefficient per variable");
    }
    for (const auto& c : coeffs_) require_same_ring(c.ring(), ring_, "Derivation");
  }

  static Derivation zero(const PolyRing& ring) { return Derivation(ring); }

  /// d/dx_i
  static Derivation coordinate(const PolyRing& ring, std::size_t i) {
    Derivation d(ring);
    d.coeffs_.at(i) = Poly::constant(ring, 1);
    return d;
  }

  const PolyRing& ring() const noexcept { return ring_; }
  const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
  const Poly& coeff(std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  Poly apply(const Poly& f) const {
    require_same_ring(f.ring(), ring_, "Derivation::apply");
    Poly r(ring_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      Poly df = f.partial(i);
      if (!df.is_zero()) r += coeffs_[i] * df;
    }
    return r;
  }

  /// D^k(f), the k-fold operator iterate.
  Poly apply_n(Poly f, std::size_t k) const {
    for (std::size_t j = 0; j < k && !f.is_zero(); ++j) f = apply(f);
    return f;
  }

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    require_same_ring(a.ring_, b.ring_, "Derivation::add");
    Derivation r(a.ring_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    require_same_ring(a.ring_, b.ring_, "Derivation::sub");
    Derivation r(a.ring_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  Derivation operator-() const {
    Derivation r(ring_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
  }

  /// f * D
  friend Derivation operator*(const Poly& f, const Derivation& d) {
    require_same_ring(f.ring(), d.ring_, "Derivation::scale");
    Derivation r(d.ring_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = f * d.coeffs_[i];
    return r;
  }

  Derivation scaled(Fp c) const {
    Derivation r(ring_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].scaled(c);
    return r;
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  PolyRing ring_;
  std::vector<Poly> coeffs_;
};

/// [D1, D2] with coefficients D1(g_i) - D2(f_i).
inline Derivation derivation_bracket(const Derivation& d1, const Derivation& d2) {
  require_same_ring(d1.ring(), d2.ring(), "derivation_bracket");
  std::vector<Poly> c;
  c.reserve(d1.ring().nvars());
  for (std::size_t i = 0; i < d1.ring().nvars(); ++i) {
    c.push_back(d1.apply(d2.coeff(i)) - d2.apply(d1.coeff(i)));
  }
  return Derivation(d1.ring(), std::move(c));
}

/// D^[p]: the p-th operator power of a derivation is again a derivation,
/// determined by its values D^p(x_i) on the generators.
inline Derivation derivation_p_power(const Derivation& d) {
  const PolyRing& ring = d.ring();
  std::vector<Poly> c;
  c.reserve(ring.nvars());
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    // D(x_i) = f_i, so D^p(x_i) = D^{p-1}(f_i).
    c.push_back(d.apply_n(d.coeff(i), ring.p() - 1));
  }
  return Derivation(ring, std::move(c));
}

inline std::string to_string(const Derivation& d) {
  std::string out;
  for (std::size_t i = 0; i < d.ring().nvars(); ++i) {
    if (d.coeff(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(d.coeff(i)) + ")*D" + d.ring().var(i).name;
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Derivation& d) { return os << to_string(d); }

}  // namespace charpcartan

#endif  // CHARPCARTAN_DERIVATION_HPP
