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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "luceopt/error.hpp"
#include "luceopt/model.hpp"
#include "test_util.hpp"

namespace luceopt {
namespace {

using testing::FiveProductAttractiveness;
using testing::FiveProductRelation;
using testing::FixedPriceNum;
using testing::RegViolation;
using testing::RevOrdFail;

std::vector<Edge> Closure(const DominanceRelation& rel) {
  return rel.closure_edges();
}

TEST(ValidatePartialOrder, ChainIsAccepted) {
  const auto rel =
      ValidatePartialOrder(std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}, 3);
  EXPECT_EQ(Closure(rel), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(ValidatePartialOrder, TwoCycleIsRejected) {
  try {
    ValidatePartialOrder(std::vector<Edge>{{0, 1}, {1, 0}}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycle);
  }
}

TEST(ValidatePartialOrder, ClosureAddsImpliedEdge) {
  const auto rel = ValidatePartialOrder(std::vector<Edge>{{0, 1}, {1, 2}}, 3);
  EXPECT_TRUE(rel.Dominates(0, 2));
  EXPECT_EQ(rel.reduction_edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(ValidatePartialOrder, SelfLoopAndRangeErrors) {
  EXPECT_THROW(ValidatePartialOrder(std::vector<Edge>{{1, 1}}, 2), Error);
  try {
    ValidatePartialOrder(std::vector<Edge>{{0, 3}}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIdOutOfRange);
  }
}

TEST(ValidatePartialOrder, LongerCycleIsRejected) {
  EXPECT_THROW(
      ValidatePartialOrder(std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}, 3),
      Error);
}

TEST(ThresholdDominance, FiveProductEdges) {
  const std::vector<Edge> expected = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3},
                                      {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(Closure(FiveProductRelation()), expected);
}

TEST(ThresholdDominance, EqualAttractivenessGivesNoEdges) {
  EXPECT_TRUE(ThresholdDominance(std::vector<double>{1, 1, 1}, 0.3).empty());
}

TEST(ThresholdDominance, RegularityExampleEdges) {
  EXPECT_EQ(Closure(RegViolation().dominance()),
            (std::vector<Edge>{{0, 2}, {0, 3}}));
}

TEST(ThresholdDominance, TieAtThresholdGivesNoEdge) {
  // 3 = (1 + 0.5) * 2 exactly.
  EXPECT_TRUE(ThresholdDominance(std::vector<double>{3, 2}, 0.5).empty());
}

TEST(ThresholdDominance, RejectsNonPositiveInput) {
  try {
    ThresholdDominance(std::vector<double>{1, 0}, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPositiveInput);
  }
  EXPECT_THROW(ThresholdDominance(std::vector<double>{1, 2}, 0.0), Error);
}

TEST(ConsiderationSet, Examples) {
  EXPECT_EQ(ConsiderationSet({0, 1, 2, 3}, RegViolation()), (Subset{0, 1}));
  EXPECT_EQ(ConsiderationSet({2}, RegViolation()), (Subset{2}));
  const std::vector<double> a = FiveProductAttractiveness();
  std::vector<Product> products;
  for (double x : a) products.push_back({1.0, x});
  const Instance five(products, 1.0, FiveProductRelation());
  EXPECT_EQ(ConsiderationSet({1, 2, 3, 4}, five), (Subset{1, 2}));
  EXPECT_TRUE(ConsiderationSet({}, five).empty());
}

TEST(ConsiderationSet, RejectsUnsortedSubset) {
  EXPECT_THROW(ConsiderationSet({1, 0}, RegViolation()), Error);
}

TEST(ChoiceProbability, RegularityViolation) {
  const Instance inst = RegViolation();
  EXPECT_NEAR(ChoiceProbability(1, {1, 2, 3}, inst), 4.0 / 11.0, 1e-12);
  EXPECT_NEAR(ChoiceProbability(1, {0, 1, 2, 3}, inst), 4.0 / 10.0, 1e-12);
  EXPECT_LT(ChoiceProbability(1, {1, 2, 3}, inst),
            ChoiceProbability(1, {0, 1, 2, 3}, inst));
}

TEST(ChoiceProbability, DominatedProductHasZeroShare) {
  EXPECT_EQ(ChoiceProbability(2, {0, 1, 2}, RevOrdFail()), 0.0);
  EXPECT_EQ(ChoiceProbability(0, {1, 2}, RevOrdFail()), 0.0);
}

TEST(ExpectedRevenue, RevenueOrderTable) {
  const Instance inst = RevOrdFail();
  EXPECT_NEAR(ExpectedRevenue({0, 2}, inst), 1834.0 / 83.0, 1e-12);
  EXPECT_NEAR(ExpectedRevenue({0, 2}, inst), 22.096, 1e-3);
  EXPECT_NEAR(ExpectedRevenue({1}, inst), 15.086, 1e-3);
  EXPECT_NEAR(ExpectedRevenue({0}, inst), 16.824, 1e-3);
  EXPECT_NEAR(ExpectedRevenue({2}, inst), 9.857, 1e-3);
  EXPECT_EQ(ExpectedRevenue({}, inst), 0.0);
}

TEST(ExpectedRevenue, ZeroOutsideOptionOnEmptySet) {
  const Instance inst({{3, 1}}, 0.0, DominanceRelation::Empty(1));
  EXPECT_EQ(ExpectedRevenue({}, inst), 0.0);
  EXPECT_DOUBLE_EQ(ExpectedRevenue({0}, inst), 3.0);
}

TEST(ModelProperties, RandomInstances) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.1, 10.0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + rep % 8;
    std::vector<Product> products(n);
    for (Product& p : products) p = {unif(rng), unif(rng)};
    const Instance inst(products, rep % 3 == 0 ? 0.0 : unif(rng),
                        testing::RandomOrder(n, 0.4, rng));
    const Instance mnl(products, inst.a0(), DominanceRelation::Empty(n));
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Subset s;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) s.push_back(i);
      }
      const Subset c = ConsiderationSet(s, inst);
      EXPECT_TRUE(IsAntichain(c, inst.dominance()));
      EXPECT_EQ(ConsiderationSet(c, inst), c);
      EXPECT_DOUBLE_EQ(ExpectedRevenue(s, inst), ExpectedRevenue(c, inst));
      double total = ChoiceProbability(kOutsideOption, s, inst);
      double logit_den = inst.a0();
      for (int i : s) logit_den += products[i].attractiveness;
      for (int x : s) {
        total += ChoiceProbability(x, s, inst);
        if (!std::binary_search(c.begin(), c.end(), x)) {
          EXPECT_EQ(ChoiceProbability(x, s, inst), 0.0);
        }
        EXPECT_NEAR(ChoiceProbability(x, s, mnl),
                    products[x].attractiveness / logit_den, 1e-15);
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(ThresholdDominance, AlwaysAPartialOrder) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.01, 10.0);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> a(1 + rep % 15);
    for (double& x : a) x = unif(rng);
    const auto rel = ThresholdDominance(a, 0.05 + 0.01 * rep);
    const auto again = ValidatePartialOrder(rel.closure_edges(), rel.size());
    EXPECT_EQ(again.closure_edges(), rel.closure_edges());
  }
}

TEST(PricedModel, PriceEffectScenarios) {
  const std::vector<double> u = {std::log(10.0), std::log(8.0), std::log(6.0),
                                 std::log(3.0)};
  const PricedInstance inst(u, 0.5, 1.0);
  const PriceVector same(4, std::log(3.0));
  EXPECT_EQ(ConsiderationSetPriced({0, 1, 2, 3}, same, inst), (Subset{0, 1}));
  const PriceVector second = {std::log(4.0), std::log(4.0), std::log(3.0),
                              std::log(2.0)};
  EXPECT_EQ(ConsiderationSetPriced({0, 1, 2, 3}, second, inst),
            (Subset{0, 1, 2}));
  // Attractiveness (10/3, 8/3, 2, 1) under the common price: the threshold
  // rule also yields 3 over 4, which leaves c unchanged.
  std::vector<double> a;
  for (double x : u) a.push_back(std::exp(x - std::log(3.0)));
  EXPECT_EQ(ThresholdDominance(a, 0.5).closure_edges(),
            (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}, {2, 3}}));
}

TEST(PricedModel, UniformPricesKeepEverything) {
  const PricedInstance inst({1.0, 1.0, 1.0}, 0.2, 1.0);
  EXPECT_EQ(ConsiderationSetPriced({0, 1, 2}, PriceVector(3, 0.7), inst),
            (Subset{0, 1, 2}));
}

TEST(PricedModel, FixedPriceExampleRevenue) {
  const PricedInstance inst = FixedPriceNum();
  PriceVector p(11, 1.4);
  p[0] = 1.8;
  Subset all(11);
  for (int i = 0; i < 11; ++i) all[i] = i;
  EXPECT_NEAR(ExpectedRevenuePriced(all, p, inst), 1.298, 1e-3);
  EXPECT_TRUE(IsValidPair(all, p, inst));
  EXPECT_FALSE(IsValidPair(all, PriceVector(11, 1.5), inst));
  EXPECT_EQ(ExpectedRevenuePriced(all, PriceVector(11, 0.0), inst), 0.0);
}

TEST(PricedModel, SingleProductHalfShare) {
  const PricedInstance inst({2.0}, 0.5, 1.0);
  EXPECT_DOUBLE_EQ(ExpectedRevenuePriced({0}, {2.0}, inst), 1.0);
  EXPECT_TRUE(IsValidPair({0}, {1.0}, inst));
}

TEST(PricedModel, ValidPairNeedsMatchingSupport) {
  const PricedInstance inst({2.0, 1.0}, 0.5, 1.0);
  EXPECT_TRUE(IsValidPair({0}, {1.0, kNotOffered}, inst));
  EXPECT_FALSE(IsValidPair({0}, {1.0, 1.0}, inst));
  EXPECT_FALSE(IsValidPair({0}, {-0.1, kNotOffered}, inst));
}

TEST(PricedModel, SnapRepairsRoundingOnly) {
  const PricedInstance inst({2.0, 1.0}, 1.0, 1.0);
  // Exactly on the boundary e^{u1 - p1} = 2 e^{u2 - p2} up to rounding.
  PriceVector p = {2.0, 1.0 + std::log(2.0) + 1e-15};
  PriceVector q = p;
  EXPECT_TRUE(SnapToValid({0, 1}, q, inst));
  EXPECT_TRUE(IsValidPair({0, 1}, q, inst));
  EXPECT_NEAR(q[1], p[1], 1e-12);
  PriceVector far = {1.0, 3.0};
  EXPECT_FALSE(SnapToValid({0, 1}, far, inst));
  EXPECT_EQ(far, (PriceVector{1.0, 3.0}));
}

TEST(PricedModel, SnapRaisesTopWhenBottomIsFree) {
  const PricedInstance inst({2.0, 1.0}, 1.0, 1.0);
  // Product 2 at price 0 sits on the boundary; it cannot get cheaper.
  PriceVector p = {1.0 - std::log(2.0), 0.0};
  p[0] = std::nextafter(p[0], 0.0);
  EXPECT_TRUE(SnapToValid({0, 1}, p, inst));
  EXPECT_TRUE(IsValidPair({0, 1}, p, inst));
  EXPECT_EQ(p[1], 0.0);
}

TEST(PricedInstance, Validation) {
  EXPECT_THROW(PricedInstance({1.0, 2.0}, 0.5, 1.0), Error);
  EXPECT_THROW(PricedInstance({2.0, 1.0}, 0.0, 1.0), Error);
  EXPECT_THROW(PricedInstance({2.0, 1.0}, 0.5, -1.0), Error);
}

TEST(Instance, Validation) {
  EXPECT_THROW(Instance({{1, 0}}, 1.0, DominanceRelation::Empty(1)), Error);
  EXPECT_THROW(Instance({{-1, 1}}, 1.0, DominanceRelation::Empty(1)), Error);
  EXPECT_THROW(Instance({{1, 1}}, -1.0, DominanceRelation::Empty(1)), Error);
  EXPECT_THROW(Instance({{1, 1}}, 1.0, DominanceRelation::Empty(2)), Error);
}

}  // namespace
}  // namespace luceopt
