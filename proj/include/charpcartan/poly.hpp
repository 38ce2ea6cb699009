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

#ifndef CHARPCARTAN_POLY_HPP
#define CHARPCARTAN_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fp.hpp"

namespace charpcartan {

struct Variable {
  std::string name;
  bool laurent = false;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Coordinate ring F_p[x_1^{(+-1)}, ..., x_n^{(+-1)}]: a polynomial ring in
/// which some variables are inverted. Cheap to copy (shared immutable data);
/// two rings compare equal when prime and variable list agree.
class PolyRing {
 public:
  PolyRing(Prime prime, std::vector<Variable> vars)
      : d_(std::make_shared<const Data>(Data{prime, std::move(vars)})) {
    for (std::size_t i = 0; i < d_->vars.size(); ++i) {
      if (d_->vars[i].name.empty()) throw InvalidRing("empty variable name");
      for (std::size_t j = 0; j < i; ++j) {
        if (d_->vars[i].name == d_->vars[j].name) {
          throw InvalidRing("duplicate variable '" + d_->vars[i].name + "'");
        }
      }
    }
  }

  /// The constant ring F_p (no variables).
  explicit PolyRing(Prime prime) : PolyRing(prime, {}) {}

  const Prime& prime() const noexcept { return d_->prime; }
  std::uint64_t p() const noexcept { return d_->prime.value(); }
  std::size_t nvars() const noexcept { return d_->vars.size(); }
  const std::vector<Variable>& vars() const noexcept { return d_->vars; }
  const Variable& var(std::size_t i) const { return d_->vars.at(i); }
  bool laurent(std::size_t i) const { return d_->vars.at(i).laurent; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < d_->vars.size(); ++i) {
      if (d_->vars[i].name == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.d_ == b.d_ || (a.d_->prime == b.d_->prime && a.d_->vars == b.d_->vars);
  }

 private:
  struct Data {
    Prime prime;
    std::vector<Variable> vars;
  };
  std::shared_ptr<const Data> d_;
};

inline void require_same_ring(const PolyRing& a, const PolyRing& b, const char* where) {
  if (!(a == b)) throw RingMismatch(std::string(where) + ": operands live in different rings");
}

using Exponents = std::vector<std::int64_t>;

struct Term {
  Exponents exps;
  Fp coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial over F_p. Terms are kept sorted ascending
/// lexicographically by exponent vector with no zero coefficients.
class Poly {
 public:
  explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}

  static Poly zero(const PolyRing& ring) { return Poly(ring); }

  static Poly constant(const PolyRing& ring, std::int64_t c) {
    Poly r(ring);
    Fp v = ring.prime().reduce(c);
    if (v != 0) r.terms_.push_back({Exponents(ring.nvars(), 0), v});
    return r;
  }

  static Poly variable(const PolyRing& ring, std::size_t i) {
    return monomial(ring, unit_exponent(ring, i, 1), 1);
  }

  static Poly monomial(const PolyRing& ring, Exponents exps, std::int64_t c) {
    Poly r(ring);
    r.check_exponents(exps);
    Fp v = ring.prime().reduce(c);
    if (v != 0) r.terms_.push_back({std::move(exps), v});
    return r;
  }

  /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
  static Poly from_terms(const PolyRing& ring, std::vector<Term> terms) {
    Poly r(ring);
    for (auto& t : terms) {
      r.check_exponents(t.exps);
      t.coeff %= ring.p();
    }
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
  }

  const PolyRing& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t nterms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(),
                        [](std::int64_t e) { return e == 0; }));
  }

  /// Constant term (coefficient of the zero exponent vector).
  Fp constant_term() const {
    Exponents z(ring_.nvars(), 0);
    return coeff(z);
  }

  Fp coeff(const Exponents& exps) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                               [](const Term& t, const Exponents& e) { return t.exps < e; });
    return (it != terms_.end() && it->exps == exps) ? it->coeff : 0;
  }

  /// Units of the ring: a single term whose non-Laurent exponents vanish.
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (!ring_.laurent(i) && terms_[0].exps[i] != 0) return false;
    }
    return true;
  }

  Poly inverse_unit() const {
    if (!is_unit()) throw NotAUnit("polynomial is not a unit of its ring");
    Exponents e = terms_[0].exps;
    for (auto& x : e) x = -x;
    Poly r(ring_);
    r.terms_.push_back({std::move(e), ring_.prime().inv(terms_[0].coeff)});
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = ring_.prime().neg(t.coeff);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_, "poly_mul");
    Poly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    const Prime& p = a.ring_.prime();
    const std::size_t n = a.ring_.nvars();
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = s.exps[i] + t.exps[i];
        r.terms_.push_back({std::move(e), p.mul(s.coeff, t.coeff)});
      }
    }
    r.normalize();
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(Fp c) const {
    c %= ring_.p();
    Poly r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = ring_.prime().mul(t.coeff, c);
    return r;
  }

  /// f^e; negative e requires f to be a unit.
  Poly pow(std::int64_t e) const {
    if (e < 0) return inverse_unit().pow(-e);
    Poly result = constant(ring_, 1);
    Poly base = *this;
    auto k = static_cast<std::uint64_t>(e);
    while (k != 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k != 0) base = base * base;
    }
    return result;
  }

  /// f^p, computed termwise: coefficients of F_p are fixed by Frobenius.
  Poly frobenius() const {
    Poly r(ring_);
    r.terms_ = terms_;
    const auto p = static_cast<std::int64_t>(ring_.p());
    for (auto& t : r.terms_) {
      for (auto& x : t.exps) x *= p;
    }
    return r;
  }

  /// Inverse of frobenius(): g with g^p = f.
  Poly pth_root() const {
    Poly r(ring_);
    r.terms_ = terms_;
    const auto p = static_cast<std::int64_t>(ring_.p());
    for (auto& t : r.terms_) {
      for (auto& x : t.exps) {
        if (x % p != 0) {
          throw NotInFrobeniusSubring("exponent " + std::to_string(x) +
                                      " is not divisible by p = " + std::to_string(p));
        }
        x /= p;
      }
    }
    return r;
  }

  bool in_frobenius_subring() const {
    const auto p = static_cast<std::int64_t>(ring_.p());
    return std::all_of(terms_.begin(), terms_.end(), [p](const Term& t) {
      return std::all_of(t.exps.begin(), t.exps.end(), [p](std::int64_t x) { return x % p == 0; });
    });
  }

  /// Formal partial derivative in variable i; exponent factors reduce mod p.
  Poly partial(std::size_t i) const {
    if (i >= ring_.nvars()) throw InvalidArgument("variable index out of range");
    const Prime& p = ring_.prime();
    Poly r(ring_);
    for (const auto& t : terms_) {
      Fp c = p.mul(t.coeff, p.reduce(t.exps[i]));
      if (c == 0) continue;
      Exponents e = t.exps;
      e[i] -= 1;
      r.terms_.push_back({std::move(e), c});
    }
    // Lowering one coordinate by one preserves the lexicographic order.
    return r;
  }

  /// Ring homomorphism x_i -> images[i] into `target`. Negative exponents
  /// require the corresponding image to be a unit.
  Poly substitute(const std::vector<Poly>& images, const PolyRing& target) const {
    if (images.size() != ring_.nvars()) {
      throw InvalidArgument("substitute: expected one image per variable");
    }
    for (const auto& im : images) require_same_ring(im.ring(), target, "substitute");
    if (!(target.prime() == ring_.prime())) throw RingMismatch("substitute: characteristic differs");
    Poly out(target);
    for (const auto& t : terms_) {
      Poly m = constant(target, static_cast<std::int64_t>(t.coeff));
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (t.exps[i] != 0) m = m * images[i].pow(t.exps[i]);
      }
      out += m;
    }
    return out;
  }

  /// Largest |exponent| over all terms and variables.
  std::int64_t max_abs_exponent() const noexcept {
    std::int64_t m = 0;
    for (const auto& t : terms_) {
      for (auto x : t.exps) m = std::max(m, x < 0 ? -x : x);
    }
    return m;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  static Exponents unit_exponent(const PolyRing& ring, std::size_t i, std::int64_t e) {
    if (i >= ring.nvars()) throw InvalidArgument("variable index out of range");
    Exponents x(ring.nvars(), 0);
    x[i] = e;
    return x;
  }

 private:
  void check_exponents(const Exponents& exps) const {
    if (exps.size() != ring_.nvars()) {
      throw InvalidArgument("exponent vector has wrong length");
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 && !ring_.laurent(i)) {
        throw NegativeExponentOnPolynomialVariable("negative exponent on polynomial variable '" +
                                                   ring_.var(i).name + "'");
      }
    }
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exps < b.exps; });
    const Prime& p = ring_.prime();
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Fp c = 0;
      std::size_t j = i;
      for (; j < terms_.size() && terms_[j].exps == terms_[i].exps; ++j) c = p.add(c, terms_[j].coeff);
      if (c != 0) {
        if (out != i) terms_[out].exps = std::move(terms_[i].exps);
        terms_[out].coeff = c;
        ++out;
      }
      i = j;
    }
    terms_.resize(out);
  }

  static Poly combine(const Poly& a, const Poly& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_, subtract ? "poly_sub" : "poly_add");
    const Prime& p = a.ring_.prime();
    Poly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exps < b.terms_[j].exps)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exps < a.terms_[i].exps) {
        Term t = b.terms_[j++];
        if (subtract) t.coeff = p.neg(t.coeff);
        r.terms_.push_back(std::move(t));
      } else {
        Fp c = subtract ? p.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                        : p.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].exps, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  PolyRing ring_;
  std::vector<Term> terms_;
};

inline Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }
inline Poly partial_derivative(const Poly& f, std::size_t i) { return f.partial(i); }
inline Poly pth_root(const Poly& f) { return f.pth_root(); }

/// Renders in the expression grammar, highest term first, e.g.
/// `2*x^3*y^-1 + 1`. The zero polynomial renders as `0`.
inline std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < it->exps.size(); ++i) {
      if (it->exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += f.ring().var(i).name;
      if (it->exps[i] != 1) mono += '^' + std::to_string(it->exps[i]);
    }
    if (mono.empty()) {
      out += std::to_string(it->coeff);
    } else if (it->coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(it->coeff) + '*' + mono;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

}  // namespace charpcartan

#endif  // CHARPCARTAN_POLY_HPP
