// Copyright 2026 The BSPE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "bspe/analysis.hpp"

namespace bspe::analysis {
namespace {

const double kGoldenRoot = (3.0 - std::sqrt(5.0)) / 2.0;

TEST(RuinClosedForm, Values) {
  const auto quarter = ruin_closed_form(0.25);
  EXPECT_NEAR(quarter.q, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(quarter.q_conditional, 1.0 / 9.0, 1e-15);
  const auto r = ruin_closed_form(0.26);
  EXPECT_NEAR(r.q, 13.0 / 37.0, 1e-15);
  EXPECT_NEAR(r.q_conditional, 0.12344777209642074, 1e-15);
  EXPECT_LT(ruin_closed_form(1e-9).q, 2e-9);
  EXPECT_THROW(ruin_closed_form(0.5), std::invalid_argument);
  EXPECT_THROW(ruin_closed_form(0.0), std::invalid_argument);
}

TEST(RuinClosedForm, SolvesTheFixedPointEquation) {
  for (double p = 0.01; p < 0.5; p += 0.01) {
    const double q = ruin_closed_form(p).q;
    EXPECT_LT(std::abs(q - (p + (1.0 - p) * q * q)), 1e-12) << p;
    EXPECT_GT(q, 0.0);
    EXPECT_LT(q, 1.0);
  }
}

TEST(RuinExactFinite, ShortWalks) {
  for (double p : {0.1, 0.26, 0.4}) EXPECT_DOUBLE_EQ(ruin_exact_finite(p, 1), p);
  EXPECT_DOUBLE_EQ(ruin_exact_finite(0.25, 2), 0.25);
  // Three steps: back at once, or forward then back twice.
  EXPECT_NEAR(ruin_exact_finite(0.26, 3), 0.26 + 0.74 * 0.26 * 0.26, 1e-15);
  EXPECT_DOUBLE_EQ(ruin_exact_finite(0.26, 1, 1), 0.0);
  EXPECT_NEAR(ruin_exact_finite(0.26, 2, 1), 0.26 * 0.26, 1e-15);
}

TEST(RuinExactFinite, LongWalkStaysBelowClosedForm) {
  const double q = ruin_closed_form(0.26).q;
  const double v = ruin_exact_finite(0.26, 200);
  EXPECT_GT(v, 0.0);
  EXPECT_LE(v, q);
  EXPECT_NEAR(v, 0.35135135135134876, 1e-12);
  EXPECT_NEAR(ruin_exact_finite(0.26, 200, 1), 0.1234477720964181, 1e-12);
  EXPECT_NEAR(ruin_exact_finite(0.40, 200), 0.6665945176157919, 1e-12);
}

TEST(RuinExactFinite, NonDecreasingInStepsAndBounded) {
  for (double p : {0.05, 0.1, 0.26, 0.4, 0.45}) {
    const auto closed = ruin_closed_form(p);
    double prev = 0.0, prev1 = 0.0;
    for (std::size_t n = 1; n <= 300; n += 7) {
      const double v = ruin_exact_finite(p, n), v1 = ruin_exact_finite(p, n, 1);
      EXPECT_GE(v, prev);
      EXPECT_GE(v1, prev1);
      EXPECT_LE(v, closed.q + 1e-12);
      EXPECT_LE(v1, closed.q_conditional + 1e-12);
      prev = v;
      prev1 = v1;
    }
  }
}

TEST(Factors, AtTheHeadlineBias) {
  const auto f = factors(0.26);
  EXPECT_NEAR(f.r1, 0.136552, 1e-6);
  EXPECT_NEAR(f.r2, 0.273006, 1e-6);
  EXPECT_NEAR(f.ratio, 10.986, 1e-3);
  EXPECT_NEAR(f.ratio, 10.986125245634799, 1e-12);
  EXPECT_NEAR(factors(0.25).r1, 0.25 - 1.0 / 9.0, 1e-15);
}

TEST(Factors, AlgebraicIdentities) {
  for (double p = 0.02; p < kGoldenRoot; p += 0.005) {
    const auto f = factors(p);
    EXPECT_NEAR(f.ratio * f.r1 * f.r2, f.r1 + f.r2, 1e-12 * f.ratio);
    EXPECT_GE(f.ratio, std::max(1.0 / f.r1, 1.0 / f.r2));
    EXPECT_GT(f.r2, 0.0);
  }
}

TEST(Factors, R1VanishesAtTheGoldenRoot) {
  EXPECT_NEAR(factors(kGoldenRoot).r1, 0.0, 1e-15);
  EXPECT_TRUE(std::isinf(factors(kGoldenRoot + 1e-9).ratio));
  EXPECT_GT(factors(kGoldenRoot - 1e-9).r1, 0.0);
  EXPECT_LT(factors(kGoldenRoot + 1e-9).r1, 0.0);
  EXPECT_NEAR(r1_root(), 0.381966011250105, 1e-12);
  EXPECT_GT(r1_root(), 0.38);
}

TEST(MinimizeRatio, FindsTheMinimumNearQuarter) {
  const auto m = minimize_ratio(0.05, 0.38, 1e-6);
  EXPECT_TRUE(m.single_basin);
  EXPECT_NEAR(m.p, 0.2600064453735466, 1e-5);
  EXPECT_NEAR(m.ratio, 10.986125230618168, 1e-9);
  EXPECT_LE(m.ratio, ratio(0.26));
  EXPECT_LE(ratio(0.26), 11.0);
}

TEST(MinimizeRatio, DegenerateIntervals) {
  const auto point = minimize_ratio(0.26, 0.26, 1e-6);
  EXPECT_DOUBLE_EQ(point.p, 0.26);
  EXPECT_DOUBLE_EQ(point.ratio, ratio(0.26));
  EXPECT_THROW(minimize_ratio(0.3, 0.2, 1e-6), std::invalid_argument);
  EXPECT_THROW(minimize_ratio(0.0, 0.2, 1e-6), std::invalid_argument);
  EXPECT_THROW(minimize_ratio(0.1, 0.4, 1e-6), std::invalid_argument);
}

TEST(MinimizeRatio, BoundaryMinimumOnOneSidedInterval) {
  const auto m = minimize_ratio(0.30, 0.37, 1e-8);
  EXPECT_NEAR(m.p, 0.30, 1e-7);
}

}  // namespace
}  // namespace bspe::analysis
