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

#ifndef CHARPCARTAN_FP_HPP
#define CHARPCARTAN_FP_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace charpcartan {

/// Residue class mod p, always kept in [0, p).
using Fp = std::uint64_t;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return r;
}

// Deterministic Miller-Rabin; bases {2, 7, 61} are exact below 4.7e9.
inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

/// An odd prime 3 <= p <= 2^31. All residues are < 2^31, so every product
/// fits in 64 bits.
class Prime {
 public:
  static constexpr std::int64_t kMax = std::int64_t{1} << 31;

  explicit Prime(std::int64_t p) : p_(static_cast<std::uint64_t>(p)) {
    if (p < 3 || p > kMax) {
      throw InvalidPrime("p must be an odd prime in [3, 2^31], got " + std::to_string(p));
    }
    if (!detail::is_prime_u32(p_)) {
      throw InvalidPrime(std::to_string(p) + " is not prime");
    }
  }

  std::uint64_t value() const noexcept { return p_; }

  Fp reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Fp>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }

  Fp add(Fp a, Fp b) const noexcept {
    Fp s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp sub(Fp a, Fp b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Fp neg(Fp a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const noexcept { return (a * b) % p_; }
  Fp pow(Fp a, std::uint64_t e) const noexcept { return detail::powmod(a, e, p_); }

  Fp inv(Fp a) const {
    if (a % p_ == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  /// Signed representative in (-p/2, p/2].
  std::int64_t centered(Fp a) const noexcept {
    auto v = static_cast<std::int64_t>(a);
    return v > static_cast<std::int64_t>(p_ / 2) ? v - static_cast<std::int64_t>(p_) : v;
  }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t p_;
};

inline Fp fp_inv(std::int64_t a, const Prime& p) { return p.inv(p.reduce(a)); }

}  // namespace charpcartan

#endif  // CHARPCARTAN_FP_HPP
