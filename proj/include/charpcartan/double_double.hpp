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

#ifndef CHARPCARTAN_DOUBLE_DOUBLE_HPP
#define CHARPCARTAN_DOUBLE_DOUBLE_HPP

#include <cmath>
#include <cstdint>
#include <string_view>
#include <utility>

namespace charpcartan {

/// Unevaluated sum hi + lo of two doubles with |lo| <= ulp(hi)/2, giving
/// about 106 significant bits. Only the operations the counting formulas
/// need are provided.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  static DoubleDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
  }

  static DoubleDouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
  }

  static DoubleDouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  friend DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
    DoubleDouble s = two_sum(a.hi, b.hi);
    DoubleDouble t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
  }

  DoubleDouble operator-() const { return {-hi, -lo}; }
  friend DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

  friend DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
    DoubleDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
  }

  friend DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
    // Two Newton-style correction steps on the quotient.
    double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * DoubleDouble(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DoubleDouble(q2);
    double q3 = r.hi / b.hi;
    DoubleDouble q = quick_two_sum(q1, q2);
    return q + DoubleDouble(q3);
  }

  DoubleDouble& operator+=(DoubleDouble o) { return *this = *this + o; }
  DoubleDouble& operator*=(DoubleDouble o) { return *this = *this * o; }

  friend bool operator<(DoubleDouble a, DoubleDouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }

  double to_double() const { return hi + lo; }

  /// Parses a plain decimal literal such as "3.14159..." exactly to
  /// double-double precision.
  static DoubleDouble from_decimal(std::string_view s) {
    DoubleDouble v(0.0);
    DoubleDouble scale(1.0);
    bool frac = false;
    for (char c : s) {
      if (c == '.') {
        frac = true;
        continue;
      }
      v = v * DoubleDouble(10.0) + DoubleDouble(static_cast<double>(c - '0'));
      if (frac) scale = scale * DoubleDouble(10.0);
    }
    return v / scale;
  }
};

inline DoubleDouble dd_pi() {
  static const DoubleDouble pi = DoubleDouble::from_decimal("3.141592653589793238462643383279502884197");
  return pi;
}

/// sin(x) for 0 <= x <= pi via the reflection sin(pi - x) = sin(x) and the
/// Taylor series on [0, pi/2].
inline DoubleDouble dd_sin(DoubleDouble x) {
  const DoubleDouble pi = dd_pi();
  if (DoubleDouble(pi.hi * 0.5, pi.lo * 0.5) < x) x = pi - x;
  const DoubleDouble x2 = x * x;
  DoubleDouble term = x;
  DoubleDouble sum = x;
  for (int k = 1; k < 40; ++k) {
    term = term * x2 / DoubleDouble(static_cast<double>((2 * k) * (2 * k + 1)));
    term = -term;
    sum += term;
    if (std::fabs(term.hi) < 1e-36 * std::fabs(sum.hi)) break;
  }
  return sum;
}

/// Nearest integer and the signed distance x - n. Requires |x| < 2^100.
inline std::pair<__int128, double> dd_round(DoubleDouble x) {
  double n = std::nearbyint(x.hi);
  DoubleDouble r = x - DoubleDouble(n);
  double m = std::nearbyint(r.hi);
  r = r - DoubleDouble(m);
  return {static_cast<__int128>(n) + static_cast<__int128>(m), r.to_double()};
}

}  // namespace charpcartan

#endif  // CHARPCARTAN_DOUBLE_DOUBLE_HPP
