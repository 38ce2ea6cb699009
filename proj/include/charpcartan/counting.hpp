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

#ifndef CHARPCARTAN_COUNTING_HPP
#define CHARPCARTAN_COUNTING_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "double_double.hpp"
#include "errors.hpp"
#include "fp.hpp"

namespace charpcartan {

struct CountResult {
  std::int64_t value = 0;
  double residual = 0.0;     // |raw - value|, zero for closed forms
  std::string method;        // "numeric" or "closed_form"
};

inline constexpr double kDefaultIntegralityTolerance = 1e-6;

namespace detail {

inline std::int64_t ipow_checked(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t k = 0; k < e; ++k) {
    if (__builtin_mul_overflow(r, b, &r)) throw Overflow("integer power overflows 64 bits");
  }
  return r;
}

inline DoubleDouble pairwise_sum(const std::vector<DoubleDouble>& xs, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return DoubleDouble(0.0);
  if (hi - lo == 1) return xs[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

}  // namespace detail

/// p^N (p^{2N} - 1) / 24, the genus-2 value of the dormant count, from
/// sum_{t=1}^{q-1} csc^2(pi t / q) = (q^2 - 1) / 3.
inline std::int64_t dormant_count_genus2_closed(const Prime& prime, std::int64_t level) {
  if (level < 1) throw LevelError("level N must be >= 1");
  const std::int64_t q = detail::ipow_checked(static_cast<std::int64_t>(prime.value()), level);
  __int128 v = static_cast<__int128>(q) * (static_cast<__int128>(q) * q - 1);
  if (v % 24 != 0) throw IntegralityFailure("genus-2 closed form is not an integer");
  v /= 24;
  if (v > std::numeric_limits<std::int64_t>::max()) throw Overflow("count overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

/// q^{g-1} / 2^{2g-1} * sum_{t=1}^{q-1} sin(pi t / q)^{-(2g-2)} with q = p^N,
/// evaluated in double-double arithmetic and rounded.
inline CountResult dormant_count(const Prime& prime, std::int64_t genus, std::int64_t level,
                                 double tolerance = kDefaultIntegralityTolerance) {
  if (genus < 2) throw InvalidArgument("genus must be >= 2");
  if (level < 1) throw LevelError("level N must be >= 1");
  const std::int64_t q = detail::ipow_checked(static_cast<std::int64_t>(prime.value()), level);
  if (q > 1'000'000) throw Overflow("p^N too large for the numeric sum");
  if (genus > 40) throw Overflow("genus too large for the numeric sum");

  const DoubleDouble pi = dd_pi();
  const DoubleDouble qd(static_cast<double>(q));
  std::vector<DoubleDouble> terms;
  terms.reserve(static_cast<std::size_t>(q - 1));
  for (std::int64_t t = 1; t < q; ++t) {
    DoubleDouble s = dd_sin(pi * DoubleDouble(static_cast<double>(t)) / qd);
    DoubleDouble s2 = s * s;
    DoubleDouble pw(1.0);
    for (std::int64_t k = 0; k < genus - 1; ++k) pw = pw * s2;
    terms.push_back(DoubleDouble(1.0) / pw);
  }
  DoubleDouble sum = detail::pairwise_sum(terms, 0, terms.size());

  DoubleDouble scale(1.0);
  for (std::int64_t k = 0; k < genus - 1; ++k) scale = scale * qd;
  scale = scale / DoubleDouble(std::ldexp(1.0, static_cast<int>(2 * genus - 1)));
  DoubleDouble raw = scale * sum;
  if (!(std::fabs(raw.hi) < 9.0e18)) throw Overflow("count overflows 64 bits");

  auto [n, r] = dd_round(raw);
  CountResult out{static_cast<std::int64_t>(n), std::fabs(r), "numeric"};
  if (!(out.residual < tolerance)) {
    throw IntegralityFailure("dormant count residual " + std::to_string(out.residual) +
                             " exceeds tolerance " + std::to_string(tolerance));
  }
  if (genus == 2 && out.value != dormant_count_genus2_closed(prime, level)) {
    throw IntegralityFailure("numeric genus-2 count disagrees with the closed form");
  }
  return out;
}

/// p^{N-1} (p - 1)
inline CountResult elliptic_affine_count(const Prime& prime, std::int64_t level) {
  if (level < 1) throw LevelError("level N must be >= 1");
  const auto p = static_cast<std::int64_t>(prime.value());
  std::int64_t v = 0;
  if (__builtin_mul_overflow(detail::ipow_checked(p, level - 1), p - 1, &v)) throw Overflow("count overflows");
  return {v, 0.0, "closed_form"};
}

/// |{1 <= m <= p^N - 1 : p does not divide m}| = p^N - p^{N-1}
inline CountResult bm_count_closed(const Prime& prime, std::int64_t level) {
  if (level < 1) throw LevelError("level N must be >= 1");
  const auto p = static_cast<std::int64_t>(prime.value());
  return {detail::ipow_checked(p, level) - detail::ipow_checked(p, level - 1), 0.0, "closed_form"};
}

}  // namespace charpcartan

#endif  // CHARPCARTAN_COUNTING_HPP
