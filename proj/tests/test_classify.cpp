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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "charpcartan/classify.hpp"

namespace cp = charpcartan;

namespace {

std::vector<std::int64_t> ms(const std::vector<cp::BmItem>& items) {
  std::vector<std::int64_t> out;
  for (const auto& it : items) out.push_back(it.m);
  return out;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST(Bm, Examples) {
  EXPECT_EQ(ms(cp::enumerate_Bm(cp::Prime(3), 1)), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(ms(cp::enumerate_Bm(cp::Prime(3), 2)), (std::vector<std::int64_t>{1, 2, 4, 5, 7, 8}));
  EXPECT_EQ(cp::enumerate_Bm(cp::Prime(5), 2).size(), 20u);
  EXPECT_THROW(cp::enumerate_Bm(cp::Prime(3), 0), cp::LevelError);
}

TEST(Bm, CountsMatchDirectFilter) {
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      std::vector<std::int64_t> expect;
      for (std::int64_t m = 1; m < ipow(p, n); ++m) {
        if (std::gcd(m, p) == 1) expect.push_back(m);
      }
      EXPECT_EQ(ms(cp::enumerate_Bm(cp::Prime(p), n)), expect);
      EXPECT_EQ(static_cast<std::int64_t>(expect.size()), ipow(p, n) - ipow(p, n - 1));
    }
  }
}

TEST(Bm, TruncationExamples) {
  EXPECT_EQ(cp::truncate_Bm({3, 2, 7}, 1).m, 1);
  EXPECT_EQ(cp::truncate_Bm({3, 2, 2}, 2).m, 2);
  EXPECT_EQ(cp::truncate_Bm({3, 2, 2}, 2).level, 2);
  EXPECT_THROW(cp::truncate_Bm({3, 2, 2}, 3), cp::LevelError);
  std::vector<std::int64_t> fiber;
  for (const auto& it : cp::enumerate_Bm(cp::Prime(3), 2)) {
    if (cp::truncate_Bm(it, 1).m == 1) fiber.push_back(it.m);
  }
  EXPECT_EQ(fiber, (std::vector<std::int64_t>{1, 4, 7}));
}

TEST(Bm, TruncationIsSurjectiveWithUniformFibers) {
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t t = 1; t <= n; ++t) {
        std::map<std::int64_t, std::int64_t> fibers;
        for (const auto& it : cp::enumerate_Bm(cp::Prime(p), n)) {
          auto tr = cp::truncate_Bm(it, t);
          EXPECT_EQ(tr.level, t);
          ++fibers[tr.m];
        }
        std::set<std::int64_t> image;
        for (const auto& [m, size] : fibers) {
          image.insert(m);
          EXPECT_EQ(size, ipow(p, n - t));
        }
        auto target = ms(cp::enumerate_Bm(cp::Prime(p), t));
        EXPECT_EQ(image, std::set<std::int64_t>(target.begin(), target.end()));
      }
    }
  }
}

TEST(Bm, FormsAreDlogAndCFixed) {
  cp::PolyRing r(cp::Prime(3), {{"T", true}});
  EXPECT_EQ(cp::to_string(cp::bm_to_form({3, 1, 1})), "T^-1*dT");
  EXPECT_EQ(cp::to_string(cp::bm_to_form({3, 1, 2})), "2*T^-1*dT");
  for (std::int64_t p : {3, 5, 7}) {
    for (const auto& it : cp::enumerate_Bm(cp::Prime(p), 2)) EXPECT_TRUE(cp::is_C_fixed(cp::bm_to_form(it)));
  }
}

TEST(Ba, Examples) {
  EXPECT_EQ(cp::admissible_exponents(cp::Prime(3), 2, 9), (std::vector<std::int64_t>{3, 6}));
  EXPECT_EQ(cp::enumerate_Ba(cp::Prime(3), 2, 9).size(), 18u);
  EXPECT_EQ(cp::enumerate_Ba(cp::Prime(3), 1, 2).size(), 2u);
  EXPECT_EQ(cp::enumerate_Ba(cp::Prime(5), 1, 10).size(), 4u);
  EXPECT_EQ(cp::ba_count_closed(cp::Prime(3), 2, 9), 18);
}

TEST(Ba, EnumerationMatchesBruteForce) {
  // Brute force: every polynomial a T + sum_{2 <= i <= D} a_i T^i with the
  // exponent condition, listed by scanning all coefficient vectors.
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t bound = 1; bound <= 2 * p + 1; ++bound) {
        std::set<std::pair<std::int64_t, std::map<std::int64_t, std::int64_t>>> expect;
        std::vector<std::int64_t> slots;
        for (std::int64_t i = 2; i <= bound; ++i) {
          if (i % p == 0 && i % ipow(p, n) != 0) slots.push_back(i);
        }
        const std::int64_t total = ipow(p, static_cast<std::int64_t>(slots.size()));
        for (std::int64_t a = 1; a < p; ++a) {
          for (std::int64_t code = 0; code < total; ++code) {
            std::map<std::int64_t, std::int64_t> extra;
            std::int64_t c = code;
            for (auto i : slots) {
              if (c % p != 0) extra[i] = c % p;
              c /= p;
            }
            expect.insert({a, extra});
          }
        }
        auto items = cp::enumerate_Ba(cp::Prime(p), n, bound);
        ASSERT_EQ(items.size(), expect.size());
        EXPECT_TRUE(std::is_sorted(items.begin(), items.end()));
        std::set<std::pair<std::int64_t, std::map<std::int64_t, std::int64_t>>> got;
        for (const auto& it : items) got.insert({it.a, it.extra});
        EXPECT_EQ(got, expect);
        EXPECT_EQ(cp::ba_count_closed(cp::Prime(p), n, bound), static_cast<std::int64_t>(expect.size()));
      }
    }
  }
}

TEST(Ba, FormsAreExact) {
  for (const auto& it : cp::enumerate_Ba(cp::Prime(3), 2, 9)) {
    auto w = cp::ba_to_form(it);
    EXPECT_TRUE(cp::is_C_kernel(w));
    EXPECT_EQ(cp::ba_polynomial(it).coeff({1}), static_cast<cp::Fp>(it.a));
  }
}

TEST(Ba, RefusesHugeEnumerations) { EXPECT_THROW(cp::enumerate_Ba(cp::Prime(101), 2, 100000), cp::Overflow); }

TEST(StructureTuple, Examples) {
  cp::PolyRing r(cp::Prime(3), {{"x", true}, {"y", false}});
  auto omega = cp::Poly::monomial(r, {-1, 0}, 1) * cp::DiffForm::dx(r, 0);
  auto chi = cp::DiffForm::dx(r, 1);
  auto ok = cp::check_structure_tuple({r, {omega}, {chi}});
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(cp::to_string(ok.determinant), "x^-1");
  auto bad = cp::check_structure_tuple({r, {cp::DiffForm::dx(r, 0)}, {chi}});
  EXPECT_FALSE(bad.ok);
  ASSERT_EQ(bad.failures.size(), 1u);
  EXPECT_EQ(bad.failures[0].rfind("omega 1", 0), 0u);
  cp::PolyRing empty(cp::Prime(3), std::vector<cp::Variable>{});
  EXPECT_TRUE(cp::check_structure_tuple({empty, {}, {}}).ok);
}

TEST(StructureTuple, DetectsDependentForms) {
  cp::PolyRing r(cp::Prime(3), {{"x", true}, {"y", true}});
  auto w = cp::Poly::monomial(r, {-1, 0}, 1) * cp::DiffForm::dx(r, 0);
  auto rep = cp::check_structure_tuple({r, {w, w}, {}});
  EXPECT_FALSE(rep.ok);
  EXPECT_TRUE(rep.determinant.is_zero());
  auto wrong_size = cp::check_structure_tuple({r, {w}, {}});
  EXPECT_FALSE(wrong_size.ok);
}

TEST(StructureTuple, AcceptsMixedModels) {
  for (std::int64_t p : {3, 5}) {
    for (std::size_t s = 0; s <= 2; ++s) {
      for (std::size_t t = 0; t <= 2; ++t) {
        std::vector<cp::Variable> vars;
        for (std::size_t i = 0; i < s; ++i) vars.push_back({"x" + std::to_string(i), true});
        for (std::size_t j = 0; j < t; ++j) vars.push_back({"y" + std::to_string(j), false});
        cp::PolyRing r(cp::Prime(p), vars);
        for (std::int64_t m : {std::int64_t{1}, std::int64_t{2}, p + 1}) {
          cp::StructureTuple tup{r, {}, {}};
          for (std::size_t i = 0; i < s; ++i) {
            // dlog(x_i^m), i.e. bm_to_form transported to coordinate i.
            tup.omegas.push_back(cp::Poly::monomial(r, cp::Poly::unit_exponent(r, i, -1), m) * cp::DiffForm::dx(r, i));
          }
          for (std::size_t j = 0; j < t; ++j) tup.chis.push_back(cp::DiffForm::dx(r, s + j));
          EXPECT_TRUE(cp::check_structure_tuple(tup).ok) << "p=" << p << " s=" << s << " t=" << t;
        }
      }
    }
  }
}

}  // namespace
