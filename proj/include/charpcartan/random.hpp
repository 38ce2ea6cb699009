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

#ifndef CHARPCARTAN_RANDOM_HPP
#define CHARPCARTAN_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "forms.hpp"
#include "groups.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace charpcartan {

/// Seeded generators for the randomized property suites. All draws go
/// through one engine so a seed fixes the whole run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }
  Fp element(const Prime& p) { return static_cast<Fp>(uniform(0, static_cast<std::int64_t>(p.value()) - 1)); }
  Fp nonzero(const Prime& p) { return static_cast<Fp>(uniform(1, static_cast<std::int64_t>(p.value()) - 1)); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

struct PolyShape {
  std::size_t max_terms = 4;
  std::int64_t max_degree = 3;
};

inline Poly random_poly(Rng& rng, const PolyRing& ring, PolyShape shape = {}) {
  std::vector<Term> terms;
  const auto n = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(shape.max_terms)));
  for (std::size_t k = 0; k < n; ++k) {
    Exponents e(ring.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = rng.uniform(ring.laurent(i) ? -shape.max_degree : 0, shape.max_degree);
    }
    terms.push_back({std::move(e), rng.nonzero(ring.prime())});
  }
  return Poly::from_terms(ring, std::move(terms));
}

inline PolyMatrix random_matrix(Rng& rng, const PolyRing& ring, std::size_t n, PolyShape shape = {}) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, ring, shape);
  }
  return m;
}

inline DiffForm random_form(Rng& rng, const PolyRing& ring, std::size_t degree, PolyShape shape = {}) {
  DiffForm w(ring, degree);
  if (degree > ring.nvars()) return w;
  const auto n = static_cast<std::size_t>(rng.uniform(0, 3));
  for (std::size_t k = 0; k < n; ++k) {
    IndexSet idx;
    std::vector<std::size_t> pool(ring.nvars());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng.engine());
    idx.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(degree));
    w.add_term(idx, random_poly(rng, ring, shape));
  }
  return w;
}

/// A closed 1-form: df + sum g_i^p x_i^{p-1} dx_i + sum c_i x_i^{-1} dx_i,
/// the last sum over Laurent variables. Covers the exact part, the
/// non-exact polynomial part, and the logarithmic part of H^1.
inline DiffForm random_closed_form(Rng& rng, const PolyRing& ring, bool exact_only = false) {
  const auto p = static_cast<std::int64_t>(ring.p());
  PolyShape small{3, 2};
  DiffForm w = differential(random_poly(rng, ring, {4, p + 2}));
  if (exact_only) return w;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (rng.coin()) {
      Poly g = random_poly(rng, ring, small).frobenius();
      w = w + (g * Poly::monomial(ring, Poly::unit_exponent(ring, i, p - 1), 1)) * DiffForm::dx(ring, i);
    }
    if (ring.laurent(i) && rng.coin()) {
      auto c = static_cast<std::int64_t>(rng.element(ring.prime()));
      w = w + Poly::monomial(ring, Poly::unit_exponent(ring, i, -1), c) * DiffForm::dx(ring, i);
    }
  }
  return w;
}

/// Constructively flat gl_n connections (n = 1 or 2), as an n x n grid of
/// 1-forms. Families: closed scalars, diagonal closed forms, the nilpotent
/// [[0, chi], [0, 0]], and unipotent gauge transforms g^{-1} w g + g^{-1} dg
/// of these.
inline std::vector<std::vector<DiffForm>> random_flat_connection(Rng& rng, const PolyRing& ring, std::size_t n) {
  if (n == 1) return {{random_closed_form(rng, ring)}};
  DiffForm zero(ring, 1);
  FormMatrix w;
  switch (rng.uniform(0, 1)) {
    case 0:
      w = {random_closed_form(rng, ring), zero, zero, random_closed_form(rng, ring)};
      break;
    default:
      w = {zero, random_closed_form(rng, ring), zero, zero};
      break;
  }
  if (rng.coin()) {
    // Gauge by a unipotent matrix in either triangle.
    Poly h = random_poly(rng, ring, {2, 2});
    const bool upper = rng.coin();
    PolyMatrix g = PolyMatrix::identity(ring, 2);
    PolyMatrix g_inv = PolyMatrix::identity(ring, 2);
    if (upper) {
      g(0, 1) = h;
      g_inv(0, 1) = -h;
    } else {
      g(1, 0) = h;
      g_inv(1, 0) = -h;
    }
    FormMatrix conj = multiply(multiply(g_inv, w), g);
    FormMatrix dg = multiply(g_inv, differential(g));
    for (std::size_t k = 0; k < conj.size(); ++k) conj[k] = conj[k] + dg[k];
    w = std::move(conj);
  }
  return {{w[0], w[1]}, {w[2], w[3]}};
}

}  // namespace charpcartan

#endif  // CHARPCARTAN_RANDOM_HPP
