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

#ifndef CHARPCARTAN_SELFTEST_HPP
#define CHARPCARTAN_SELFTEST_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "abstract_lie.hpp"
#include "cartier.hpp"
#include "classify.hpp"
#include "connection.hpp"
#include "counting.hpp"
#include "groups.hpp"
#include "lie.hpp"
#include "random.hpp"

namespace charpcartan {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace selftest {

inline const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> ps{3, 5, 7};
  return ps;
}

// Each criterion draws from its own stream so results do not depend on which
// criteria run before it.
inline Rng stream(std::uint64_t seed, int id) { return Rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id)); }

inline PolyMatrix random_constant_matrix(Rng& rng, const PolyRing& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Poly::constant(ring, static_cast<std::int64_t>(rng.element(ring.prime())));
  }
  return m;
}

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks";
    if (!first_failure_.empty()) s += "; first failure: " + first_failure_;
    return s;
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

template <class Body>
CriterionResult timed(int id, std::string name, double limit_seconds, Body&& body) {
  CriterionResult r{id, std::move(name), false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = tally.ok();
  r.detail = tally.summary();
  if (limit_seconds > 0 && r.seconds >= limit_seconds) {
    r.passed = false;
    r.detail += "; over time budget";
  }
  return r;
}

template <class Check>
CriterionResult matrix_pair_suite(int id, std::string name, std::uint64_t seed, Check&& check) {
  return timed(id, std::move(name), 10.0, [&](Tally& t) {
    Rng rng = stream(seed, id);
    for (auto pv : small_primes()) {
      PolyRing ring{Prime(static_cast<std::int64_t>(pv))};
      for (std::size_t n : {2, 3}) {
        MatrixLieAlgebra alg(ring, n);
        for (int k = 0; k < 200; ++k) {
          auto v = random_constant_matrix(rng, ring, n);
          auto u = random_constant_matrix(rng, ring, n);
          t.check(check(alg, v, u), "p=" + std::to_string(pv) + " gl_" + std::to_string(n) + " sample " +
                                        std::to_string(k));
        }
      }
    }
  });
}

}  // namespace selftest

inline CriterionResult criterion_jacobson(std::uint64_t seed) {
  return selftest::matrix_pair_suite(1, "Jacobson identity on gl_2, gl_3", seed,
                                     [](const auto& a, const auto& v, const auto& u) { return jacobson_check(a, v, u); });
}

inline CriterionResult criterion_l1123(std::uint64_t seed) {
  return selftest::matrix_pair_suite(2, "s_i(v,u-v) sum equals minus s_i(-v,u) sum", seed,
                                     [](const auto& a, const auto& v, const auto& u) { return l1123_check(a, v, u); });
}

inline CriterionResult criterion_cartier(std::uint64_t seed) {
  return selftest::timed(3, "Cartier laws", 0.0, [&](selftest::Tally& t) {
    Rng rng = selftest::stream(seed, 3);
    const auto& ps = selftest::small_primes();
    for (int k = 0; k < 100; ++k) {
      PolyRing ring(Prime(static_cast<std::int64_t>(ps[k % 3])), {{"x", true}, {"y", false}});
      Poly f = random_poly(rng, ring, {5, 8});
      DiffForm df = differential(f);
      t.check(cartier(df).value.is_zero() && is_C_kernel(df), "C(df) for f = " + to_string(f));
    }
    for (auto pv : ps) {
      const auto p = static_cast<std::int64_t>(pv);
      PolyRing ring(Prime(p), {{"x", true}});
      for (std::int64_t c = 1; c < p; ++c) {
        for (std::int64_t m = -20; m <= 20; ++m) {
          if (m % p == 0) continue;
          Poly u = Poly::monomial(ring, {m}, c);
          t.check(is_C_fixed(dlog(u)), "dlog(" + to_string(u) + ")");
        }
      }
    }
    for (int k = 0; k < 50; ++k) {
      PolyRing ring(Prime(static_cast<std::int64_t>(ps[k % 3])), {{"x", true}, {"y", false}});
      DiffForm w = random_closed_form(rng, ring);
      Poly f = random_poly(rng, ring, {3, 2});
      t.check(cartier(f.frobenius() * w).value == f * cartier(w).value, "semilinearity on " + to_string(w));
    }
  });
}

inline CriterionResult criterion_dual_pcurvature(std::uint64_t seed) {
  return selftest::timed(4, "p-curvature: form route equals operator route", 0.0, [&](selftest::Tally& t) {
    Rng rng = selftest::stream(seed, 4);
    const PolyRing r3(Prime(3), {{"x", false}, {"y", false}});
    const PolyRing r5(Prime(5), {{"x", false}});
    for (int k = 0; k < 50; ++k) {
      const PolyRing& ring = (k % 2 == 0) ? r3 : r5;
      const std::size_t n = (k / 2) % 2 == 0 ? 1 : 2;
      ConnMatrix conn = ConnMatrix::from_forms(ring, random_flat_connection(rng, ring, n));
      auto form = conn.to_lie_form();
      auto pc = p_curvature_form(form);
      bool same = !pc.formal;
      for (std::size_t i = 0; i < ring.nvars() && same; ++i) {
        same = pc.values[i] == p_curvature_operator(conn, Derivation::coordinate(ring, i));
      }
      t.check(same, "connection " + std::to_string(k));
    }
  });
}

inline CriterionResult criterion_maurer_cartan(std::uint64_t /*seed*/) {
  return selftest::timed(5, "Maurer-Cartan forms are flat and p-flat", 0.0, [&](selftest::Tally& t) {
    for (auto pv : selftest::small_primes()) {
      Prime p(static_cast<std::int64_t>(pv));
      for (Group g : {Group::Gm, Group::Ga, Group::Aff1}) {
        auto w = maurer_cartan(g, p);
        const std::string tag = group_name(g) + " p=" + std::to_string(pv);
        t.check(curvature_form(w).is_zero(), "curvature " + tag);
        t.check(p_curvature_form(w).is_zero(), "p-curvature " + tag);
        t.check(mc_pullback_check(g, p), "pullbacks " + tag);
      }
    }
  });
}

inline CriterionResult criterion_ga_lemma(std::uint64_t seed) {
  return selftest::timed(6, "G_a p-curvature lemma", 0.0, [&](selftest::Tally& t) {
    Rng rng = selftest::stream(seed, 6);
    const PolyRing ring(Prime(3), {{"x", false}, {"y", false}});
    for (int k = 0; k < 50; ++k) {
      DiffForm chi = random_closed_form(rng, ring, k % 2 == 0);
      t.check(lemma_ga_check(chi), "lemma on " + to_string(chi));
      ConnMatrix conn = ga_connection(chi);
      bool p_flat = true;
      for (std::size_t i = 0; i < ring.nvars(); ++i) {
        p_flat = p_flat && p_curvature_operator(conn, Derivation::coordinate(ring, i)).is_zero();
      }
      t.check(p_flat == is_C_kernel(chi), "p-flat iff C(chi) = 0 on " + to_string(chi));
    }
  });
}

inline CriterionResult criterion_classification(std::uint64_t /*seed*/) {
  return selftest::timed(7, "classification counts", 0.0, [&](selftest::Tally& t) {
    for (std::int64_t p : {3, 5}) {
      Prime prime(p);
      std::int64_t q = 1;
      for (std::int64_t n = 1; n <= 3; ++n) {
        q *= p;
        auto items = enumerate_Bm(prime, n);
        t.check(static_cast<std::int64_t>(items.size()) == q - q / p,
                "|B_m| p=" + std::to_string(p) + " N=" + std::to_string(n));
        for (std::int64_t target = 1; target <= n; ++target) {
          std::map<std::int64_t, std::int64_t> fibers;
          for (const auto& it : items) ++fibers[truncate_Bm(it, target).m];
          std::int64_t qt = 1;
          for (std::int64_t k = 0; k < target; ++k) qt *= p;
          bool ok = static_cast<std::int64_t>(fibers.size()) == qt - qt / p;
          for (const auto& [m, size] : fibers) ok = ok && size == q / qt;
          t.check(ok, "fibers p=" + std::to_string(p) + " N=" + std::to_string(n) + "->" + std::to_string(target));
        }
      }
    }
    t.check(enumerate_Ba(Prime(3), 2, 9).size() == 18, "|B_a| (p=3, N=2, D=9)");
  });
}

inline CriterionResult criterion_counting(std::uint64_t /*seed*/) {
  return selftest::timed(8, "counting formulas", 60.0, [&](selftest::Tally& t) {
    for (std::int64_t p : {3, 5, 7, 11}) {
      std::int64_t q = 1;
      for (std::int64_t n = 1; n <= 2; ++n) {
        q *= p;
        auto r = dormant_count(Prime(p), 2, n);
        const __int128 expect = static_cast<__int128>(q) * (static_cast<__int128>(q) * q - 1) / 24;
        t.check(r.value == static_cast<std::int64_t>(expect) && r.residual < 1e-6,
                "dormant g=2 p=" + std::to_string(p) + " N=" + std::to_string(n));
      }
    }
    t.check(dormant_count(Prime(5), 2, 1).value == 5, "dormant (5,2,1) = 5");
    t.check(dormant_count(Prime(7), 2, 1).value == 14, "dormant (7,2,1) = 14");
    for (std::int64_t p : {3, 5, 7}) {
      std::int64_t pn1 = 1;
      for (std::int64_t n = 1; n <= 4; ++n) {
        auto r = elliptic_affine_count(Prime(p), n);
        t.check(r.value == pn1 * (p - 1) && r.method == "closed_form",
                "elliptic p=" + std::to_string(p) + " N=" + std::to_string(n));
        pn1 *= p;
      }
    }
  });
}

/// Criteria 1-8, in order.
inline std::vector<CriterionResult> run_selftest(std::uint64_t seed) {
  return {criterion_jacobson(seed),        criterion_l1123(seed),      criterion_cartier(seed),
          criterion_dual_pcurvature(seed), criterion_maurer_cartan(seed), criterion_ga_lemma(seed),
          criterion_classification(seed),  criterion_counting(seed)};
}

}  // namespace charpcartan

#endif  // CHARPCARTAN_SELFTEST_HPP
