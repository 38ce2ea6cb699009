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

// Reference implementations used as test oracles. They are deliberately
// naive and share no code with the library beyond reading Poly terms.

#ifndef CHARPCARTAN_TESTS_ORACLE_HPP
#define CHARPCARTAN_TESTS_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "charpcartan/poly.hpp"

namespace oracle {

using Exps = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

/// Modular inverse by scanning all residues.
inline std::int64_t inverse_by_scan(std::int64_t a, std::int64_t p) {
  for (std::int64_t b = 1; b < p; ++b) {
    if (mod(a * b, p) == 1) return b;
  }
  return 0;
}

/// Polynomial as a map from exponent vector to coefficient mod p.
struct Dict {
  std::int64_t p;
  std::map<Exps, std::int64_t> c;

  void add(const Exps& e, std::int64_t v) {
    auto& slot = c[e];
    slot = mod(slot + v, p);
    if (slot == 0) c.erase(e);
  }
};

inline Dict from_poly(const charpcartan::Poly& f) {
  Dict d{static_cast<std::int64_t>(f.ring().p()), {}};
  for (const auto& t : f.terms()) d.add(t.exps, static_cast<std::int64_t>(t.coeff));
  return d;
}

inline Dict add(const Dict& a, const Dict& b) {
  Dict r = a;
  for (const auto& [e, v] : b.c) r.add(e, v);
  return r;
}

inline Dict mul(const Dict& a, const Dict& b) {
  Dict r{a.p, {}};
  for (const auto& [ea, va] : a.c) {
    for (const auto& [eb, vb] : b.c) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add(e, va * vb);
    }
  }
  return r;
}

inline Dict partial(const Dict& a, std::size_t i) {
  Dict r{a.p, {}};
  for (const auto& [e, v] : a.c) {
    Exps f = e;
    f[i] -= 1;
    r.add(f, v * mod(e[i], a.p));
  }
  return r;
}

inline bool same(const Dict& a, const charpcartan::Poly& f) { return a.c == from_poly(f).c; }

/// Square matrices over F_p with plain integer entries.
using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat mat_mul(const Mat& a, const Mat& b, std::int64_t p) {
  const std::size_t n = a.size();
  Mat r(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) r[i][j] = mod(r[i][j] + a[i][k] * b[k][j], p);
    }
  }
  return r;
}

inline Mat mat_lin(const Mat& a, std::int64_t x, const Mat& b, std::int64_t y, std::int64_t p) {
  Mat r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = mod(x * a[i][j] + y * b[i][j], p);
  }
  return r;
}

inline Mat commutator(const Mat& a, const Mat& b, std::int64_t p) {
  return mat_lin(mat_mul(a, b, p), 1, mat_mul(b, a, p), -1, p);
}

/// s_i(v,u) for i = 1..p-1 by evaluating ad(v t + u)^{p-1}(v) at t = 0..p-2
/// and solving the Vandermonde system (Lagrange interpolation over F_p).
inline std::vector<Mat> jacobson_by_interpolation(const Mat& v, const Mat& u, std::int64_t p) {
  const std::size_t n = v.size();
  const std::size_t deg = static_cast<std::size_t>(p - 1);  // number of samples; degree <= p-2
  std::vector<Mat> samples;
  for (std::size_t t = 0; t < deg; ++t) {
    Mat x = mat_lin(v, static_cast<std::int64_t>(t), u, 1, p);
    Mat w = v;
    for (std::int64_t k = 0; k + 1 < p; ++k) w = commutator(x, w, p);
    samples.push_back(w);
  }
  std::vector<Mat> coeffs(deg, Mat(n, std::vector<std::int64_t>(n, 0)));
  for (std::size_t j = 0; j < deg; ++j) {
    // Lagrange basis polynomial L_j(t) = prod_{m != j} (t - m) / (j - m).
    std::vector<std::int64_t> poly{1};
    std::int64_t denom = 1;
    for (std::size_t m = 0; m < deg; ++m) {
      if (m == j) continue;
      std::vector<std::int64_t> next(poly.size() + 1, 0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] = mod(next[k] - static_cast<std::int64_t>(m) * poly[k], p);
        next[k + 1] = mod(next[k + 1] + poly[k], p);
      }
      poly = next;
      denom = mod(denom * (static_cast<std::int64_t>(j) - static_cast<std::int64_t>(m)), p);
    }
    const std::int64_t inv = inverse_by_scan(denom, p);
    for (std::size_t k = 0; k < deg; ++k) {
      coeffs[k] = mat_lin(coeffs[k], 1, samples[j], mod(poly[k] * inv, p), p);
    }
  }
  return coeffs;
}

}  // namespace oracle

#endif  // CHARPCARTAN_TESTS_ORACLE_HPP
