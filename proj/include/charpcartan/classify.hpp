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

#ifndef CHARPCARTAN_CLASSIFY_HPP
#define CHARPCARTAN_CLASSIFY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cartier.hpp"
#include "forms.hpp"
#include "matrix.hpp"

namespace charpcartan {

namespace detail {

inline std::int64_t checked_pow(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t k = 0; k < e; ++k) {
    if (__builtin_mul_overflow(r, base, &r)) {
      throw Overflow(std::to_string(base) + "^" + std::to_string(e) + " does not fit in 64 bits");
    }
  }
  return r;
}

inline void require_level(std::int64_t n) {
  if (n < 1) throw LevelError("level N must be >= 1, got " + std::to_string(n));
}

}  // namespace detail

/// Class of (dlog(T^m), O, mult_{T^m}) in B_m^(N) on G_m.
struct BmItem {
  std::int64_t p;
  std::int64_t level;
  std::int64_t m;  // 1 <= m <= p^N - 1, gcd(m, p) = 1

  friend auto operator<=>(const BmItem&, const BmItem&) = default;
};

/// Canonical representatives {m : 1 <= m <= p^N - 1, p does not divide m}.
inline std::vector<BmItem> enumerate_Bm(const Prime& prime, std::int64_t level) {
  detail::require_level(level);
  const auto p = static_cast<std::int64_t>(prime.value());
  const std::int64_t q = detail::checked_pow(p, level);
  std::vector<BmItem> out;
  out.reserve(static_cast<std::size_t>(q - q / p));
  for (std::int64_t m = 1; m < q; ++m) {
    if (m % p != 0) out.push_back({p, level, m});
  }
  return out;
}

/// Truncation to a lower level. Units of the level-N twist are a*T^{k p^N},
/// so the class of T^m is determined by m mod p^{N'}.
inline BmItem truncate_Bm(const BmItem& item, std::int64_t target_level) {
  detail::require_level(target_level);
  if (target_level > item.level) {
    throw LevelError("cannot truncate level " + std::to_string(item.level) + " to higher level " +
                     std::to_string(target_level));
  }
  const std::int64_t q = detail::checked_pow(item.p, target_level);
  return {item.p, target_level, item.m % q};
}

/// m T^{-1} dT on F_p[T^{+-1}].
inline DiffForm bm_to_form(const BmItem& item) {
  PolyRing ring(Prime(item.p), {{"T", true}});
  DiffForm w(ring, 1);
  w.add_term({0}, Poly::monomial(ring, {-1}, item.m));
  return w;
}

/// u = a T + sum a_i T^i with a_i != 0 only for i in pZ \ p^N Z, i <= D.
struct BaItem {
  std::int64_t p;
  std::int64_t level;
  std::int64_t a;                             // in F_p^x
  std::map<std::int64_t, std::int64_t> extra;  // i -> a_i, a_i in F_p^x

  /// Canonical order: lexicographic on (a, sorted (i, a_i) list).
  friend bool operator<(const BaItem& x, const BaItem& y) {
    return std::tie(x.a, x.extra) < std::tie(y.a, y.extra);
  }
  friend bool operator==(const BaItem&, const BaItem&) = default;
};

/// Admissible exponents i <= D with p | i and p^N not dividing i.
inline std::vector<std::int64_t> admissible_exponents(const Prime& prime, std::int64_t level, std::int64_t bound) {
  detail::require_level(level);
  const auto p = static_cast<std::int64_t>(prime.value());
  std::vector<std::int64_t> out;
  // p^N may overflow for large N; then no i <= D is divisible by it.
  std::int64_t q = 0;
  try {
    q = detail::checked_pow(p, level);
  } catch (const Overflow&) {
    q = 0;
  }
  for (std::int64_t i = p; i <= bound; i += p) {
    if (q == 0 || i % q != 0) out.push_back(i);
  }
  return out;
}

inline std::vector<BaItem> enumerate_Ba(const Prime& prime, std::int64_t level, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("degree bound D must be >= 1");
  const auto p = static_cast<std::int64_t>(prime.value());
  const auto exps = admissible_exponents(prime, level, bound);
  if (exps.size() > 20 || detail::checked_pow(p, static_cast<std::int64_t>(exps.size())) > 10'000'000) {
    throw Overflow("B_a enumeration too large; lower the degree bound");
  }
  std::vector<BaItem> out;
  const std::int64_t combos = detail::checked_pow(p, static_cast<std::int64_t>(exps.size()));
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t code = 0; code < combos; ++code) {
      BaItem item{p, level, a, {}};
      std::int64_t c = code;
      for (auto i : exps) {
        if (c % p != 0) item.extra[i] = c % p;
        c /= p;
      }
      out.push_back(std::move(item));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Closed-form |B_a| under the degree bound: (p - 1) p^{#admissible}.
inline std::int64_t ba_count_closed(const Prime& prime, std::int64_t level, std::int64_t bound) {
  const auto k = static_cast<std::int64_t>(admissible_exponents(prime, level, bound).size());
  std::int64_t r = detail::checked_pow(static_cast<std::int64_t>(prime.value()), k);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(r, static_cast<std::int64_t>(prime.value()) - 1, &out)) throw Overflow("B_a count");
  return out;
}

inline Poly ba_polynomial(const BaItem& item) {
  PolyRing ring(Prime(item.p), {{"T", false}});
  Poly u = Poly::monomial(ring, {1}, item.a);
  for (const auto& [i, c] : item.extra) u += Poly::monomial(ring, {i}, c);
  return u;
}

/// du for the representative u.
inline DiffForm ba_to_form(const BaItem& item) { return differential(ba_polynomial(item)); }

/// Forms (w_1..w_s, chi_1..chi_t) on a ring with n = s + t variables.
struct StructureTuple {
  PolyRing ring;
  std::vector<DiffForm> omegas;
  std::vector<DiffForm> chis;
};

struct TupleReport {
  bool ok = true;
  std::vector<std::string> failures;
  Poly determinant;
};

/// Checks that every w_i is C-fixed, every chi_j is in the kernel of C, and
/// that together they form a basis of the global 1-forms (unit determinant
/// in the coordinate basis).
inline TupleReport check_structure_tuple(const StructureTuple& t) {
  const std::size_t n = t.ring.nvars();
  TupleReport report{true, {}, Poly(t.ring)};
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failures.push_back(std::move(why));
  };
  if (t.omegas.size() + t.chis.size() != n) {
    fail("tuple has " + std::to_string(t.omegas.size() + t.chis.size()) + " forms but the space has dimension " +
         std::to_string(n));
    return report;
  }
  PolyMatrix coeffs(t.ring, n, n);
  std::size_t row = 0;
  auto place = [&](const DiffForm& w, const std::string& slot) {
    require_same_ring(w.ring(), t.ring, "check_structure_tuple");
    if (w.degree() != 1) {
      fail(slot + ": not a 1-form");
    } else {
      for (std::size_t i = 0; i < n; ++i) coeffs(row, i) = w.coeff({i});
    }
    ++row;
  };
  for (std::size_t k = 0; k < t.omegas.size(); ++k) {
    const std::string slot = "omega " + std::to_string(k + 1);
    place(t.omegas[k], slot);
    if (t.omegas[k].degree() == 1 && !is_C_fixed(t.omegas[k])) {
      fail(slot + ": not fixed by the Cartier operator");
    }
  }
  for (std::size_t k = 0; k < t.chis.size(); ++k) {
    const std::string slot = "chi " + std::to_string(k + 1);
    place(t.chis[k], slot);
    if (t.chis[k].degree() == 1 && !is_C_kernel(t.chis[k])) {
      fail(slot + ": not in the kernel of the Cartier operator");
    }
  }
  report.determinant = coeffs.determinant();
  if (!report.determinant.is_unit()) fail("forms do not form a basis: determinant is not a unit");
  return report;
}

}  // namespace charpcartan

#endif  // CHARPCARTAN_CLASSIFY_HPP
