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

#ifndef CHARPCARTAN_ABSTRACT_LIE_HPP
#define CHARPCARTAN_ABSTRACT_LIE_HPP

#include <cstddef>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "lie.hpp"
#include "poly.hpp"

namespace charpcartan {

/// Finite-dimensional restricted Lie algebra over F_p given by structure
/// constants [e_i, e_j] = sum_k c_ij^k e_k and basis p-powers e_i^[p].
/// Elements are coordinate vectors over a coefficient ring (F_p itself by
/// default); the p-power extends to general elements through Jacobson's
/// formula. Jacobi and (ad e_i)^p = ad(e_i^[p]) are verified on construction.
class AbstractLieAlgebra {
 public:
  using Element = std::vector<Poly>;
  using Vec = std::vector<std::int64_t>;

  /// brackets[i][j] is the coordinate vector of [e_i, e_j]; pth[i] of e_i^[p].
  AbstractLieAlgebra(Prime prime, std::vector<std::string> names, std::vector<std::vector<Vec>> brackets,
                     std::vector<Vec> pth)
      : ring_(prime) {
    auto s = std::make_shared<Structure>();
    const std::size_t d = names.size();
    s->prime = prime;
    s->names = std::move(names);
    if (brackets.size() != d || pth.size() != d) {
      throw InvalidStructureConstants("bracket table and p-power table must have dim rows");
    }
    s->c.assign(d, std::vector<std::vector<Fp>>(d));
    s->pth.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (brackets[i].size() != d) throw InvalidStructureConstants("bracket table row has wrong length");
      for (std::size_t j = 0; j < d; ++j) s->c[i][j] = reduce(prime, brackets[i][j], d);
      s->pth[i] = reduce(prime, pth[i], d);
    }
    s_ = std::move(s);
    validate();
  }

  const Prime& prime() const noexcept { return s_->prime; }
  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return s_->names.size(); }
  const std::vector<std::string>& names() const noexcept { return s_->names; }

  /// Same structure with coefficients in another ring of the same characteristic.
  AbstractLieAlgebra with_ring(const PolyRing& r) const {
    if (!(r.prime() == prime())) throw RingMismatch("coefficient ring has a different characteristic");
    AbstractLieAlgebra a = *this;
    a.ring_ = r;
    return a;
  }

  Element zero() const { return Element(dim(), Poly(ring_)); }

  Element basis(std::size_t k) const {
    Element e = zero();
    e.at(k) = Poly::constant(ring_, 1);
    return e;
  }

  Element from_ints(const Vec& v) const {
    if (v.size() != dim()) throw AlgebraMismatch("coordinate vector has wrong length");
    Element e = zero();
    for (std::size_t k = 0; k < v.size(); ++k) e[k] = Poly::constant(ring_, v[k]);
    return e;
  }

  Element add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
  }

  Element sub(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
  }

  Element scale(Fp c, const Element& a) const {
    check(a);
    Element r = a;
    for (auto& x : r) x = x.scaled(c);
    return r;
  }

  Element scale_by(const Poly& f, const Element& a) const {
    check(a);
    Element r = a;
    for (auto& x : r) x = f * x;
    return r;
  }

  Element bracket(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j].is_zero()) continue;
        Poly ab = a[i] * b[j];
        for (std::size_t k = 0; k < dim(); ++k) {
          if (s_->c[i][j][k] != 0) r[k] += ab.scaled(s_->c[i][j][k]);
        }
      }
    }
    return r;
  }

  /// Splits off the first nonzero coordinate: (a e_k + w)^[p] =
  /// a^p e_k^[p] + w^[p] + sum_i s_i(a e_k, w)/i.
  Element p_power(const Element& x) const {
    check(x);
    std::size_t k = 0;
    while (k < dim() && x[k].is_zero()) ++k;
    if (k == dim()) return zero();
    Element head = zero();
    head[k] = x[k];
    Element rest = x;
    rest[k] = Poly(ring_);
    Element out = zero();
    Poly ap = x[k].frobenius();
    for (std::size_t j = 0; j < dim(); ++j) {
      if (s_->pth[k][j] != 0) out[j] = ap.scaled(s_->pth[k][j]);
    }
    bool rest_zero = true;
    for (const auto& c : rest) rest_zero = rest_zero && c.is_zero();
    if (rest_zero) return out;
    out = add(out, p_power(rest));
    return add(out, jacobson_correction(*this, head, rest));
  }

  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::vector<Poly> coords(const Element& a) const {
    check(a);
    return a;
  }

  Element from_coords(const std::vector<Poly>& c) const {
    check(c);
    return c;
  }

  /// sl_2 with basis (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f,
  /// e^[p] = f^[p] = 0, h^[p] = h.
  static AbstractLieAlgebra sl2(const Prime& p) {
    return AbstractLieAlgebra(p, {"e", "h", "f"},
                              {{{0, 0, 0}, {-2, 0, 0}, {0, 1, 0}},
                               {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}},
                               {{0, -1, 0}, {0, 0, 2}, {0, 0, 0}}},
                              {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  }

  /// Lie(Aff_1) with basis (a, b): [a, b] = b, a^[p] = a, b^[p] = 0.
  static AbstractLieAlgebra aff1(const Prime& p) {
    return AbstractLieAlgebra(p, {"a", "b"}, {{{0, 0}, {0, 1}}, {{0, -1}, {0, 0}}}, {{1, 0}, {0, 0}});
  }

  /// Parses `{"p":5,"dim":3,"brackets":{"[0,1]":[...]},"pth":[[...],...]}`.
  /// Unlisted brackets are zero and listed ones are extended antisymmetrically.
  static AbstractLieAlgebra from_json(const nlohmann::json& j) {
    try {
      const auto prime = Prime(j.at("p").get<std::int64_t>());
      const auto d = j.at("dim").get<std::size_t>();
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
        if (names.size() != d) throw InvalidStructureConstants("names must have dim entries");
      } else {
        for (std::size_t k = 0; k < d; ++k) names.push_back("e" + std::to_string(k));
      }
      std::vector<std::vector<Vec>> br(d, std::vector<Vec>(d, Vec(d, 0)));
      std::vector<std::vector<bool>> seen(d, std::vector<bool>(d, false));
      if (j.contains("brackets")) {
        for (const auto& [key, value] : j.at("brackets").items()) {
          auto ij = nlohmann::json::parse(key).get<std::vector<std::size_t>>();
          if (ij.size() != 2 || ij[0] >= d || ij[1] >= d) {
            throw InvalidStructureConstants("bad bracket key " + key);
          }
          auto v = value.get<Vec>();
          if (v.size() != d) throw InvalidStructureConstants("bracket " + key + " has wrong length");
          Vec neg(d);
          for (std::size_t k = 0; k < d; ++k) neg[k] = -v[k];
          const auto a = ij[0];
          const auto b = ij[1];
          if (seen[b][a] && !same_mod(br[b][a], neg, prime)) {
            throw InvalidStructureConstants("bracket " + key + " is not antisymmetric");
          }
          br[a][b] = v;
          seen[a][b] = true;
          if (!seen[b][a]) br[b][a] = neg;
        }
      }
      auto pth = j.at("pth").get<std::vector<Vec>>();
      return AbstractLieAlgebra(prime, std::move(names), std::move(br), std::move(pth));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidStructureConstants(std::string("malformed algebra JSON: ") + e.what());
    }
  }

  static AbstractLieAlgebra load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidStructureConstants(std::string("malformed algebra JSON: ") + e.what());
    }
    return from_json(j);
  }

 private:
  struct Structure {
    Prime prime{3};
    std::vector<std::string> names;
    std::vector<std::vector<std::vector<Fp>>> c;
    std::vector<std::vector<Fp>> pth;
  };

  static std::vector<Fp> reduce(const Prime& p, const Vec& v, std::size_t d) {
    if (v.size() != d) throw InvalidStructureConstants("structure vector has wrong length");
    std::vector<Fp> r(d);
    for (std::size_t k = 0; k < d; ++k) r[k] = p.reduce(v[k]);
    return r;
  }

  static bool same_mod(const Vec& a, const Vec& b, const Prime& p) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (p.reduce(a[k]) != p.reduce(b[k])) return false;
    }
    return true;
  }

  void check(const Element& a) const {
    if (a.size() != dim()) throw AlgebraMismatch("element has wrong dimension");
    for (const auto& x : a) require_same_ring(x.ring(), ring_, "AbstractLieAlgebra");
  }

  using FpMatrix = std::vector<std::vector<Fp>>;

  // Matrix of ad(v) on the basis: column j holds [v, e_j].
  FpMatrix ad_matrix(const std::vector<Fp>& v) const {
    const std::size_t d = dim();
    const Prime& p = s_->prime;
    FpMatrix m(d, std::vector<Fp>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) m[k][j] = p.add(m[k][j], p.mul(v[i], s_->c[i][j][k]));
      }
    }
    return m;
  }

  FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) const {
    const std::size_t d = dim();
    const Prime& p = s_->prime;
    FpMatrix r(d, std::vector<Fp>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) r[i][j] = p.add(r[i][j], p.mul(a[i][k], b[k][j]));
      }
    }
    return r;
  }

  void validate() const {
    const std::size_t d = dim();
    const Prime& p = s_->prime;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          if (p.add(s_->c[i][j][k], s_->c[j][i][k]) != 0) {
            throw InvalidStructureConstants("bracket is not antisymmetric");
          }
        }
      }
    }
    // Jacobi in the form ad([e_i, e_j]) = [ad e_i, ad e_j].
    std::vector<FpMatrix> ad;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Fp> e(d, 0);
      e[i] = 1;
      ad.push_back(ad_matrix(e));
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        FpMatrix lhs = ad_matrix(s_->c[i][j]);
        FpMatrix ab = mat_mul(ad[i], ad[j]);
        FpMatrix ba = mat_mul(ad[j], ad[i]);
        for (std::size_t r = 0; r < d; ++r) {
          for (std::size_t c = 0; c < d; ++c) {
            if (lhs[r][c] != p.sub(ab[r][c], ba[r][c])) {
              throw InvalidStructureConstants("Jacobi identity fails");
            }
          }
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      FpMatrix acc(d, std::vector<Fp>(d, 0));
      for (std::size_t k = 0; k < d; ++k) acc[k][k] = 1;
      FpMatrix base = ad[i];
      for (std::uint64_t e = p.value(); e != 0; e >>= 1U) {
        if (e & 1U) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
      }
      if (acc != ad_matrix(s_->pth[i])) {
        throw InvalidStructureConstants("(ad e_" + std::to_string(i) + ")^p differs from ad(e_" +
                                        std::to_string(i) + "^[p])");
      }
    }
  }

  std::shared_ptr<const Structure> s_;
  PolyRing ring_;
};

}  // namespace charpcartan

#endif  // CHARPCARTAN_ABSTRACT_LIE_HPP
