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

#include <gtest/gtest.h>

#include "charpcartan/cartier.hpp"
#include "charpcartan/random.hpp"
#include "oracle.hpp"

namespace cp = charpcartan;

namespace {

cp::PolyRing poly_xy(std::int64_t p) { return cp::PolyRing(cp::Prime(p), {{"x", false}, {"y", false}}); }
cp::PolyRing laurent_xy(std::int64_t p) { return cp::PolyRing(cp::Prime(p), {{"x", true}, {"y", false}}); }
cp::PolyRing laurent_x(std::int64_t p) { return cp::PolyRing(cp::Prime(p), {{"x", true}}); }
cp::Poly X(const cp::PolyRing& r) { return cp::Poly::variable(r, 0); }
cp::Poly Y(const cp::PolyRing& r) { return cp::Poly::variable(r, 1); }
cp::Poly mono(const cp::PolyRing& r, cp::Exponents e, std::int64_t c = 1) { return cp::Poly::monomial(r, std::move(e), c); }
cp::DiffForm dx(const cp::PolyRing& r) { return cp::DiffForm::dx(r, 0); }
cp::DiffForm dy(const cp::PolyRing& r) { return cp::DiffForm::dx(r, 1); }

// Cartier operator from the monomial rule x^{pk + (p-1) e_i} dx_i -> x^k dx_i
// (all other monomials map to zero), valid on closed forms.
cp::DiffForm cartier_by_monomials(const cp::DiffForm& w) {
  const auto& r = w.ring();
  const auto p = static_cast<std::int64_t>(r.p());
  cp::DiffForm out(r, 1);
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    const auto c = w.coeff({i});
    for (const auto& t : c.terms()) {
      cp::Exponents e = t.exps;
      e[i] += 1;
      bool ok = true;
      for (auto& x : e) {
        if (oracle::mod(x, p) != 0) ok = false;
        x = (x - oracle::mod(x, p)) / p;
      }
      if (!ok) continue;
      e[i] -= 1;
      out.add_term({i}, cp::Poly::monomial(r, e, static_cast<std::int64_t>(t.coeff)));
    }
  }
  return out;
}

TEST(Forms, ExteriorDerivativeExamples) {
  auto r = poly_xy(3);
  EXPECT_EQ(cp::differential(X(r).pow(2)), X(r).scaled(2) * dx(r));
  EXPECT_EQ(cp::exterior_derivative(X(r) * dy(r)), cp::wedge(dx(r), dy(r)));
  cp::DiffForm expect(r, 2);
  expect.add_term({0, 1}, cp::Poly::constant(r, 1));
  EXPECT_EQ(cp::exterior_derivative(X(r) * dy(r)), expect);
}

TEST(Forms, DSquaredIsZero) {
  cp::Rng rng(1);
  for (std::int64_t p : {3, 5, 7}) {
    auto r = cp::PolyRing(cp::Prime(p), {{"x", true}, {"y", false}, {"z", false}});
    for (int k = 0; k < 40; ++k) {
      EXPECT_TRUE(cp::exterior_derivative(cp::differential(cp::random_poly(rng, r, {5, 6}))).is_zero());
      EXPECT_TRUE(cp::exterior_derivative(cp::exterior_derivative(cp::random_form(rng, r, 1))).is_zero());
    }
  }
}

TEST(Forms, WedgeExamples) {
  auto r = poly_xy(3);
  EXPECT_TRUE(cp::wedge(dx(r), dx(r)).is_zero());
  EXPECT_EQ(cp::wedge(dx(r), dy(r)), -cp::wedge(dy(r), dx(r)));
  EXPECT_EQ(cp::wedge(X(r) * dx(r), Y(r) * dy(r)), (X(r) * Y(r)) * cp::wedge(dx(r), dy(r)));
  EXPECT_THROW(cp::wedge(dx(r), dx(poly_xy(5))), cp::RingMismatch);
}

TEST(Forms, GradedLeibnizAndAnticommutativity) {
  cp::Rng rng(2);
  auto r = cp::PolyRing(cp::Prime(5), {{"x", true}, {"y", false}, {"z", false}});
  for (int k = 0; k < 40; ++k) {
    auto a = cp::random_form(rng, r, 1);
    auto b = cp::random_form(rng, r, 1);
    auto c = cp::random_form(rng, r, 2);
    EXPECT_EQ(cp::wedge(a, b), -cp::wedge(b, a));
    EXPECT_EQ(cp::exterior_derivative(cp::wedge(a, b)),
              cp::wedge(cp::exterior_derivative(a), b) - cp::wedge(a, cp::exterior_derivative(b)));
    EXPECT_EQ(cp::exterior_derivative(cp::wedge(c, a)),
              cp::wedge(cp::exterior_derivative(c), a) + cp::wedge(c, cp::exterior_derivative(a)));
  }
}

TEST(Forms, PairingExamples) {
  auto r = poly_xy(3);
  EXPECT_EQ(cp::pairing(cp::Derivation::coordinate(r, 0), dx(r)), cp::Poly::constant(r, 1));
  EXPECT_TRUE(cp::pairing(cp::Derivation::coordinate(r, 1), dx(r)).is_zero());
  auto l = laurent_x(3);
  cp::Derivation euler(l, {X(l)});
  EXPECT_EQ(cp::pairing(euler, mono(l, {-1}) * dx(l)), cp::Poly::constant(l, 1));
  EXPECT_THROW(cp::pairing(euler, cp::wedge(dx(l), dx(l))), cp::DegreeError);
}

TEST(Forms, Rendering) {
  auto l = laurent_x(3);
  EXPECT_EQ(cp::to_string(mono(l, {-1}) * dx(l)), "x^-1*dx");
  auto r = poly_xy(3);
  EXPECT_EQ(cp::to_string(cp::wedge(dx(r), dy(r))), "dx^dy");
  EXPECT_EQ(cp::to_string(cp::DiffForm(r, 1)), "0");
}

TEST(Cartier, Examples) {
  auto r = cp::PolyRing(cp::Prime(3), {{"x", false}});
  // x^{p-1} dx -> dx on the twist (same ring).
  EXPECT_EQ(cp::cartier(X(r).pow(2) * dx(r)).value, dx(r));
  EXPECT_TRUE(cp::cartier(dx(r)).value.is_zero());
  auto l = laurent_x(3);
  EXPECT_EQ(cp::cartier(mono(l, {-1}) * dx(l)).value, mono(l, {-1}) * dx(l));
}

TEST(Cartier, Errors) {
  auto r = poly_xy(3);
  EXPECT_THROW(cp::cartier(X(r) * dy(r)), cp::NotClosed);
  EXPECT_THROW(cp::cartier(cp::wedge(dx(r), dy(r))), cp::DegreeError);
  EXPECT_THROW(cp::cartier(cp::DiffForm::function(X(r))), cp::DegreeError);
}

TEST(Cartier, MembershipExamples) {
  auto l = laurent_x(3);
  auto r = cp::PolyRing(cp::Prime(3), {{"x", false}});
  EXPECT_TRUE(cp::is_C_fixed(mono(l, {-1}) * dx(l)));
  EXPECT_FALSE(cp::is_C_fixed(dx(r)));
  EXPECT_TRUE(cp::is_C_fixed(cp::DiffForm(r, 1)));
  EXPECT_TRUE(cp::is_C_kernel(dx(r)));
  EXPECT_FALSE(cp::is_C_kernel(mono(l, {-1}) * dx(l)));
  EXPECT_TRUE(cp::is_C_kernel(X(r) * dx(r)));
  EXPECT_FALSE(cp::is_C_kernel(X(poly_xy(3)) * dy(poly_xy(3))));  // not closed
}

TEST(Cartier, MatchesMonomialRule) {
  cp::Rng rng(31);
  for (std::int64_t p : {3, 5, 7}) {
    auto r = laurent_xy(p);
    for (int k = 0; k < 60; ++k) {
      auto w = cp::random_closed_form(rng, r);
      EXPECT_EQ(cp::cartier(w).value, cartier_by_monomials(w)) << cp::to_string(w);
    }
  }
}

TEST(Cartier, KillsExactForms) {
  cp::Rng rng(32);
  for (std::int64_t p : {3, 5, 7}) {
    auto r = laurent_xy(p);
    for (int k = 0; k < 100; ++k) {
      auto df = cp::differential(cp::random_poly(rng, r, {6, 10}));
      EXPECT_TRUE(cp::is_C_kernel(df));
    }
  }
}

TEST(Cartier, DlogIsFixedAndAdditive) {
  cp::Rng rng(33);
  for (std::int64_t p : {3, 5, 7}) {
    auto l = laurent_x(p);
    for (int k = 0; k < 100; ++k) {
      auto c = static_cast<std::int64_t>(rng.nonzero(l.prime()));
      auto m = rng.uniform(-20, 20);
      if (m % p == 0) m = 0;
      auto u = mono(l, {m}, c);
      EXPECT_TRUE(cp::is_C_fixed(cp::dlog(u)));
      auto v = mono(l, {rng.uniform(-5, 5)}, static_cast<std::int64_t>(rng.nonzero(l.prime())));
      EXPECT_EQ(cp::cartier(cp::dlog(u * v)).value, cp::cartier(cp::dlog(u)).value + cp::cartier(cp::dlog(v)).value);
    }
  }
}

TEST(Cartier, FrobeniusSemilinear) {
  cp::Rng rng(34);
  for (std::int64_t p : {3, 5, 7}) {
    auto r = laurent_xy(p);
    for (int k = 0; k < 50; ++k) {
      auto w = cp::random_closed_form(rng, r);
      auto f = cp::random_poly(rng, r, {3, 2});
      EXPECT_EQ(cp::cartier(f.frobenius() * w).value, f * cp::cartier(w).value);
    }
  }
}

TEST(Cartier, KatzFormulaForGeneralFields) {
  cp::Rng rng(35);
  for (std::int64_t p : {3, 5}) {
    auto r = laurent_xy(p);
    for (int k = 0; k < 40; ++k) {
      auto w = cp::random_closed_form(rng, r);
      cp::Derivation d(r, {cp::random_poly(rng, r, {2, 2}), cp::random_poly(rng, r, {2, 2})});
      EXPECT_EQ(cp::katz_cartier_pairing(d, w), cp::cartier_pairing_expanded(d, w));
    }
  }
}

TEST(Cartier, NeverRaisesInternalErrorOnClosedForms) {
  cp::Rng rng(36);
  for (std::int64_t p : {3, 5, 7}) {
    auto r = laurent_xy(p);
    for (int k = 0; k < 50; ++k) EXPECT_NO_THROW(cp::cartier(cp::random_closed_form(rng, r)));
  }
}

}  // namespace
