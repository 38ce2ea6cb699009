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

#include "charpcartan/classify.hpp"
#include "charpcartan/counting.hpp"
#include "charpcartan/double_double.hpp"

namespace cp = charpcartan;

namespace {

struct Frozen {
  std::int64_t p, g, n, value;
};

// Reference values of q^{g-1}/2^{2g-1} sum_t csc^{2g-2}(pi t/q), computed
// once with 60-digit arbitrary-precision arithmetic.
const std::vector<Frozen> kFrozen{
    {3, 2, 1, 1},           {3, 2, 2, 30},           {5, 2, 1, 5},           {5, 2, 2, 650},
    {7, 2, 1, 14},          {7, 2, 2, 4900},         {11, 2, 1, 55},         {11, 2, 2, 73810},
    {13, 2, 1, 91},         {13, 2, 2, 201110},      {3, 3, 1, 1},           {3, 3, 2, 414},
    {5, 3, 1, 15},          {5, 3, 2, 172250},       {7, 3, 1, 98},          {7, 3, 2, 9652020},
    {11, 3, 1, 1331},       {11, 3, 2, 2180952642},  {13, 3, 1, 3549},       {13, 3, 2, 16184890358},
    {3, 4, 1, 1},           {3, 4, 2, 7317},         {5, 4, 1, 50},          {5, 4, 2, 64146875},
    {7, 4, 1, 833},         {7, 4, 2, 27042967210},  {11, 4, 1, 42592},      {11, 4, 2, 91995814572079},
    {13, 4, 1, 186745},     {13, 4, 2, 1860065492454689},
};

TEST(Dormant, Examples) {
  EXPECT_EQ(cp::dormant_count(cp::Prime(5), 2, 1).value, 5);
  EXPECT_EQ(cp::dormant_count(cp::Prime(7), 2, 1).value, 14);
  EXPECT_EQ(cp::dormant_count(cp::Prime(3), 2, 2).value, 30);
  auto r = cp::dormant_count(cp::Prime(5), 2, 1);
  EXPECT_EQ(r.method, "numeric");
  EXPECT_LT(r.residual, 1e-6);
}

TEST(Dormant, MatchesFrozenReferenceValues) {
  for (const auto& f : kFrozen) {
    auto r = cp::dormant_count(cp::Prime(f.p), f.g, f.n);
    EXPECT_EQ(r.value, f.value) << "p=" << f.p << " g=" << f.g << " N=" << f.n;
    EXPECT_LT(r.residual, 1e-6);
  }
}

TEST(Dormant, GenusTwoClosedForm) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    std::int64_t q = 1;
    for (std::int64_t n = 1; n <= 2; ++n) {
      q *= p;
      EXPECT_EQ(cp::dormant_count_genus2_closed(cp::Prime(p), n), q * (q * q - 1) / 24);
      EXPECT_EQ(cp::dormant_count(cp::Prime(p), 2, n).value, q * (q * q - 1) / 24);
    }
  }
}

TEST(Dormant, GenusThreePolynomial) {
  // q^2 (q^2 - 1)(q^2 + 11) / 1440 from the csc^4 power-sum identity.
  for (std::int64_t p : {3, 5, 7}) {
    std::int64_t q = 1;
    for (std::int64_t n = 1; n <= 2; ++n) {
      q *= p;
      EXPECT_EQ(cp::dormant_count(cp::Prime(p), 3, n).value, q * q * (q * q - 1) * (q * q + 11) / 1440);
    }
  }
}

TEST(Dormant, Errors) {
  EXPECT_THROW(cp::dormant_count(cp::Prime(3), 1, 1), cp::InvalidArgument);
  EXPECT_THROW(cp::dormant_count(cp::Prime(3), 2, 0), cp::LevelError);
  // A tolerance of zero cannot be met by a nonzero residual.
  bool failed = false;
  try {
    auto r = cp::dormant_count(cp::Prime(13), 4, 2, 0.0);
    failed = r.residual >= 0.0;
  } catch (const cp::IntegralityFailure&) {
    failed = true;
  }
  EXPECT_TRUE(failed);
  EXPECT_THROW(cp::dormant_count(cp::Prime(13), 5, 2), cp::Overflow);
}

TEST(Elliptic, Examples) {
  EXPECT_EQ(cp::elliptic_affine_count(cp::Prime(3), 1).value, 2);
  EXPECT_EQ(cp::elliptic_affine_count(cp::Prime(3), 2).value, 6);
  EXPECT_EQ(cp::elliptic_affine_count(cp::Prime(5), 3).value, 100);
  EXPECT_EQ(cp::elliptic_affine_count(cp::Prime(5), 3).method, "closed_form");
  EXPECT_EQ(cp::elliptic_affine_count(cp::Prime(5), 3).residual, 0.0);
}

TEST(Bm, ClosedCountMatchesEnumeration) {
  EXPECT_EQ(cp::bm_count_closed(cp::Prime(3), 1).value, 2);
  EXPECT_EQ(cp::bm_count_closed(cp::Prime(3), 2).value, 6);
  EXPECT_EQ(cp::bm_count_closed(cp::Prime(5), 2).value, 20);
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      EXPECT_EQ(cp::bm_count_closed(cp::Prime(p), n).value, static_cast<std::int64_t>(cp::enumerate_Bm(cp::Prime(p), n).size()));
    }
    EXPECT_EQ(cp::elliptic_affine_count(cp::Prime(p), 1).value, cp::bm_count_closed(cp::Prime(p), 1).value);
  }
}

TEST(DoubleDouble, PiAndSine) {
  auto pi = cp::dd_pi();
  EXPECT_DOUBLE_EQ(pi.hi, 3.141592653589793);
  // The low word carries the next ~16 digits of pi.
  EXPECT_NEAR(pi.lo, 1.2246467991473532e-16, 1e-30);
  auto s = cp::dd_sin(pi / cp::DoubleDouble(6.0));
  EXPECT_NEAR((s - cp::DoubleDouble(0.5)).hi, 0.0, 1e-30);
  auto one = cp::dd_sin(pi / cp::DoubleDouble(2.0));
  EXPECT_NEAR((one - cp::DoubleDouble(1.0)).hi, 0.0, 1e-30);
}

}  // namespace
