// Copyright 2026 The luceopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "luceopt/pricing.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "luceopt/bench_harness.hpp"
#include "luceopt/error.hpp"
#include "luceopt/lambert_w.hpp"
#include "luceopt/oracles.hpp"
#include "test_util.hpp"

namespace luceopt {
namespace {

using testing::FixedPointW;
using testing::FixedPriceBad;
using testing::FixedPriceNum;
using testing::RelClose;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

Subset Prefix(int k) {
  Subset s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  return s;
}

TEST(FixedPricePolicy, Examples) {
  const PricingSolution num = FixedPricePolicy(FixedPriceNum(), 11);
  EXPECT_NEAR(num.revenue, 1.0, 1e-12);
  EXPECT_EQ(num.k, 1);
  ASSERT_EQ(num.prices.size(), 1u);
  EXPECT_NEAR(num.prices[0], 2.0, 1e-12);

  const PricingSolution one = FixedPricePolicy(PricedInstance({1.0}, 0.5, 1.0), 1);
  EXPECT_NEAR(one.revenue, FixedPointW(1.0), 1e-12);
  EXPECT_NEAR(one.prices[0], 1.0 + FixedPointW(1.0), 1e-12);

  for (double t : {0.01, 1.0, 50.0}) {
    const PricingSolution two =
        FixedPricePolicy(PricedInstance({1.0, 1.0}, t, 1.0), 2);
    EXPECT_EQ(two.k, 2);
    EXPECT_NEAR(two.revenue, FixedPointW(2.0), 1e-12);
    EXPECT_NEAR(two.revenue, 0.852605502013726, 1e-12);
  }
}

TEST(FixedPricePolicy, Errors) {
  EXPECT_EQ(CodeOf([] { FixedPricePolicy(PricedInstance({1.0}, 1.0, 0.0), 1); }),
            ErrorCode::kZeroOutsideOption);
}

TEST(TwoProductEqualPrice, Examples) {
  EXPECT_NEAR(TwoProductEqualPrice(0, 0, 2), 0.0, 1e-15);
  EXPECT_NEAR(TwoProductEqualPrice(1, 0, 1), std::log(std::exp(1.0) + 1.0),
              1e-15);
  EXPECT_NEAR(TwoProductEqualPrice(1.5, 3, 4),
              TwoProductEqualPrice(-0.5, 1, 4) + 2.0, 1e-12);
  EXPECT_EQ(CodeOf([] { TwoProductEqualPrice(0, 0, 0); }),
            ErrorCode::kNonPositiveInput);
}

TEST(TwoProductEqualPrice, MaximizesRevenueOnTheConstraint) {
  // H(p_i) = p_i e^{u_i - p_i} + p_j (T - e^{u_i - p_i}) with p_j chosen so
  // that the attractions sum to T.
  const double ui = 1.0, uj = 0.0, total = 1.0;
  double best = -1.0, arg = 0.0;
  for (double pi = ui - std::log(total) + 1e-4; pi < 10.0; pi += 1e-4) {
    const double ai = std::exp(ui - pi);
    const double aj = total - ai;
    const double pj = uj - std::log(aj);
    const double h = pi * ai + pj * aj;
    if (h > best) best = h, arg = pi;
  }
  EXPECT_NEAR(arg, TwoProductEqualPrice(ui, uj, total), 2e-4);
}

TEST(JaptlmCandidate, WorkedExample) {
  const PricedInstance inst = FixedPriceNum();
  const BoundaryCandidate c = JaptlmCandidate(inst, 11, 1, 10);
  const double x = 6.0 * std::exp((2.0 + 10.0 * std::log(2.0)) / 12.0);
  const double w = c.revenue;
  EXPECT_NEAR(w * std::exp(w), x, 1e-10 * x);
  EXPECT_NEAR(c.revenue, 1.896, 1e-3);
  EXPECT_TRUE(c.feasible);
  PriceVector full(c.prices.begin(), c.prices.end());
  EXPECT_NEAR(ExpectedRevenuePriced(Prefix(11), full, inst), c.revenue, 1e-8);
}

TEST(JaptlmCandidate, EmptyMiddleGroupAndThresholdGap) {
  const PricedInstance inst({5.0, 3.0, 2.0, 0.5}, 0.7, 2.0);
  for (int k1 = 1; k1 < 4; ++k1) {
    const BoundaryCandidate c = JaptlmCandidate(inst, 4, k1, 4 - k1);
    ASSERT_EQ(c.prices.size(), 4u);
    EXPECT_TRUE(std::isfinite(c.revenue));
    const double top = inst.utility(0) - c.prices[0];
    const double bottom = inst.utility(3) - c.prices[3];
    EXPECT_NEAR(top - bottom, std::log1p(0.7), 1e-12);
    EXPECT_NEAR(top, c.u_s, 1e-12);
  }
}

TEST(JaptlmCandidate, Errors) {
  const PricedInstance inst = FixedPriceNum();
  EXPECT_EQ(CodeOf([&] { JaptlmCandidate(inst, 3, 0, 1); }),
            ErrorCode::kBadGroupSizes);
  EXPECT_EQ(CodeOf([&] { JaptlmCandidate(inst, 3, 2, 2); }),
            ErrorCode::kBadGroupSizes);
  EXPECT_EQ(
      CodeOf([] { JaptlmCandidate(PricedInstance({3, 0}, 1, 0), 2, 1, 1); }),
      ErrorCode::kZeroOutsideOption);
}

TEST(JaptlmCandidate, FeasibleCandidatesMatchTheirRevenue) {
  const PricingExperimentConfig cfg{8, 0.3, 1.0, 40, 99, 0};
  int feasible = 0;
  for (int i = 0; i < cfg.count; ++i) {
    const PricedInstance inst = GeneratePricingInstance(cfg, i);
    for (int k = 2; k <= inst.size(); ++k) {
      for (int k1 = 1; k1 < k; ++k1) {
        for (int k2 = 1; k1 + k2 <= k; ++k2) {
          const BoundaryCandidate c = JaptlmCandidate(inst, k, k1, k2);
          if (!c.feasible) continue;
          ++feasible;
          PriceVector full(inst.size(), kNotOffered);
          std::copy(c.prices.begin(), c.prices.end(), full.begin());
          EXPECT_TRUE(IsValidPair(Prefix(k), full, inst));
          EXPECT_NEAR(ExpectedRevenuePriced(Prefix(k), full, inst), c.revenue,
                      1e-8);
        }
      }
    }
  }
  EXPECT_GT(feasible, 0);
}

TEST(SolveJaptlmK, WorkedExample) {
  const PricedInstance inst = FixedPriceNum();
  const PricingSolution k1 = SolveJaptlmK(inst, 1);
  EXPECT_NEAR(k1.revenue, 1.0, 1e-12);
  EXPECT_NEAR(k1.prices[0], 2.0, 1e-12);
  EXPECT_EQ(k1.mode, PricingMode::kUnconstrained);
  const PricingSolution k11 = SolveJaptlmK(inst, 11);
  EXPECT_EQ(k11.mode, PricingMode::kBoundaryTight);
  EXPECT_NEAR(k11.revenue, 1.896, 1e-3);
  EXPECT_GE(k11.revenue, 1.298);
}

TEST(SolveJaptlmK, EqualUtilitiesUseTheFixedPrice) {
  for (double t : {0.05, 2.0}) {
    const PricingSolution s =
        SolveJaptlmK(PricedInstance({0.0, 0.0}, t, 1.0), 2);
    EXPECT_EQ(s.mode, PricingMode::kUnconstrained);
    EXPECT_NEAR(s.revenue, LambertW(2.0 / std::exp(1.0)), 1e-12);
    EXPECT_DOUBLE_EQ(s.prices[0], s.prices[1]);
  }
}

TEST(SolveJaptlm, WorkedExample) {
  const PricedInstance inst = FixedPriceNum();
  const PricingSolution sol = SolveJaptlm(inst);
  EXPECT_EQ(sol.k, 11);
  EXPECT_EQ(sol.k1, 1);
  EXPECT_EQ(sol.k2, 10);
  EXPECT_NEAR(sol.revenue, 1.896, 1e-3);
  EXPECT_GT(sol.revenue, 1.298);
  // Tight threshold: a_1(p_1) / a_k(p_k) = 1 + t.
  const double ratio = std::exp((inst.utility(0) - sol.prices[0]) -
                                (inst.utility(10) - sol.prices[10]));
  EXPECT_NEAR(ratio, 1.0 + inst.t(), 1e-9);
}

TEST(SolveJaptlm, SingleProduct) {
  const PricingSolution sol = SolveJaptlm(PricedInstance({2.0}, 0.3, 1.0));
  EXPECT_EQ(sol.k, 1);
  EXPECT_NEAR(sol.revenue, 1.0, 1e-12);
}

TEST(SolveJaptlm, FixedPriceFallsBehindAsClonesGrow) {
  double last = 0.0;
  for (int n : {10, 100, 1000}) {
    const PricedInstance inst = FixedPriceBad(n);
    const double ratio = SolveJaptlm(inst).revenue /
                         FixedPricePolicy(inst, inst.size()).revenue;
    EXPECT_GT(ratio, last) << "N = " << n;
    last = ratio;
  }
}

TEST(SolveJaptlm, BoundaryOutputsAreTightWithFlatMiddle) {
  const PricingExperimentConfig cfg{10, 0.2, 1.0, 100, 5, 0};
  int boundary = 0;
  for (int i = 0; i < cfg.count; ++i) {
    const PricedInstance inst = GeneratePricingInstance(cfg, i);
    const PricingSolution sol = SolveJaptlm(inst);
    if (sol.mode != PricingMode::kBoundaryTight) continue;
    ++boundary;
    const int k = sol.k;
    const double gap = (inst.utility(0) - sol.prices[0]) -
                       (inst.utility(k - 1) - sol.prices[k - 1]);
    EXPECT_NEAR(gap, std::log1p(inst.t()), 1e-9);
    for (int j = sol.k1; j < k - sol.k2; ++j) {
      EXPECT_NEAR(sol.prices[j], 1.0 + sol.revenue, 1e-9);
    }
  }
  EXPECT_GT(boundary, 0);
}

TEST(SolveJaptlmK, MatchesGridOracle) {
  const PricingExperimentConfig cfg{3, 0.5, 1.0, 6, 17, 0};
  for (int i = 0; i < cfg.count; ++i) {
    const PricedInstance inst = GeneratePricingInstance(cfg, i);
    for (int k = 1; k <= 3; ++k) {
      const OracleResult ref = NumericPricingOracle(inst, k);
      try {
        EXPECT_TRUE(RelClose(SolveJaptlmK(inst, k).revenue, ref.value, 1e-3))
            << "instance " << i << " k " << k;
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kNoFeasibleCandidate);
        EXPECT_LE(ref.value, SolveJaptlm(inst).revenue * (1.0 + 1e-3));
      }
    }
  }
}

TEST(QuasiSamePricePolicy, SlackThresholdMatchesFixedPrice) {
  const PricedInstance inst({1.2, 1.0, 0.9}, 0.5, 1.0);
  EXPECT_NEAR(QuasiSamePricePolicy(inst).revenue,
              FixedPricePolicy(inst, 3).revenue, 1e-9);
}

TEST(QuasiSamePricePolicy, WorkedExampleLiesBetweenBaselines) {
  const double r = QuasiSamePricePolicy(FixedPriceNum()).revenue;
  EXPECT_GT(r, 1.0 + 1e-3);
  EXPECT_LE(r, SolveJaptlm(FixedPriceNum()).revenue + 1e-6);
}

TEST(QuasiSamePricePolicy, TwoProductsMatchGridOracle) {
  // With two products the quasi-same-price family covers every price pair.
  const PricingExperimentConfig cfg{2, 0.3, 2.0, 6, 31, 0};
  for (int i = 0; i < cfg.count; ++i) {
    const PricedInstance inst = GeneratePricingInstance(cfg, i);
    const double ref = std::max(NumericPricingOracle(inst, 1).value,
                                NumericPricingOracle(inst, 2).value);
    EXPECT_TRUE(RelClose(QuasiSamePricePolicy(inst).revenue, ref, 1e-3))
        << "instance " << i;
  }
}

TEST(CheckPricingInvariants, RandomSolutionsPassAndPoliciesAreOrdered) {
  for (double t : {0.1, 0.5, 1.0}) {
    const PricingExperimentConfig cfg{8, t, 1.0 + 7.0 * (t > 0.3), 40, 3, 0};
    for (int i = 0; i < cfg.count; ++i) {
      const PricedInstance inst = GeneratePricingInstance(cfg, i);
      const PricingSolution opt = SolveJaptlm(inst);
      EXPECT_TRUE(CheckPricingInvariants(opt, inst).AllPass()) << i;
      const double fixed = FixedPricePolicy(inst, inst.size()).revenue;
      const double quasi = QuasiSamePricePolicy(inst).revenue;
      EXPECT_LE(fixed, quasi + 1e-6);
      EXPECT_LE(quasi, opt.revenue + 1e-6);
    }
  }
}

TEST(CheckPricingInvariants, HandBuiltFailures) {
  const PricedInstance flat({1.0, 1.0}, 1.0, 1.0);
  PricingSolution rising;
  rising.k = 2;
  rising.prices = {1.0, 2.0};
  rising.revenue = ExpectedRevenuePriced(Prefix(2), {1.0, 2.0}, flat);
  EXPECT_FALSE(CheckPricingInvariants(rising, flat).decreasing_prices);

  const PricedInstance steep({3.0, 0.0}, 0.1, 1.0);
  PricingSolution dominated;
  dominated.k = 2;
  dominated.prices = {1.0, 1.0};
  dominated.revenue = ExpectedRevenuePriced(Prefix(2), {1.0, 1.0}, steep);
  EXPECT_FALSE(CheckPricingInvariants(dominated, steep).valid_pair);
}

TEST(PricingSolution, FullPricesAndAssortment) {
  PricingSolution s;
  s.k = 2;
  s.prices = {3.0, 2.0};
  const PriceVector full = s.FullPrices(4);
  EXPECT_EQ(full[1], 2.0);
  EXPECT_EQ(full[3], kNotOffered);
  EXPECT_EQ(s.Assortment(), (Subset{0, 1}));
  EXPECT_EQ(PricingModeName(PricingMode::kBoundaryTight), "boundary-tight");
}

}  // namespace
}  // namespace luceopt
