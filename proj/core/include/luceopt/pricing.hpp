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

#ifndef LUCEOPT_PRICING_HPP_
#define LUCEOPT_PRICING_HPP_

// Joint assortment and pricing under the Threshold Luce model. An optimal
// offer set is always a prefix [k] of the products sorted by utility, so
// solutions carry k and the k finite prices of that prefix.

#include <string_view>
#include <vector>

#include "luceopt/model.hpp"

namespace luceopt {

enum class PricingMode { kUnconstrained, kBoundaryTight };

std::string_view PricingModeName(PricingMode mode);

struct PricingSolution {
  int k = 0;
  std::vector<double> prices;  // prices of products 0..k-1
  double revenue = 0.0;
  int k1 = 0;
  int k2 = 0;
  PricingMode mode = PricingMode::kUnconstrained;

  // Length-n vector with kNotOffered beyond the prefix.
  PriceVector FullPrices(int n) const;
  Subset Assortment() const;
};

// Stationary point of the revenue with the top k1 products sharing net
// utility u_s and the bottom k2 sharing u_s - ln(1 + t); the middle products
// take the unconstrained price 1 + R.
struct BoundaryCandidate {
  int k1 = 0;
  int k2 = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  double u_s = 0.0;
  double revenue = 0.0;
  std::vector<double> prices;
  bool feasible = false;
};

// ln((e^{u_i} + e^{u_j}) / T): the revenue-maximizing common price for two
// products whose attractiveness sums to T.
// Throws Error(kNonPositiveInput) for T <= 0.
double TwoProductEqualPrice(double u_i, double u_j, double total);

// Best uniform price over prefixes of [k]. A shared price keeps product j
// undominated iff e^{u_1 - u_j} <= 1 + t, so the largest such prefix is
// offered at price 1 + W(sum e^{u_i - 1} / a0).
// Throws Error(kZeroOutsideOption) when a0 = 0.
PricingSolution FixedPricePolicy(const PricedInstance& instance, int k);

// Throws Error(kBadGroupSizes) unless 1 <= k1, 1 <= k2, k1 + k2 <= k <= n,
// and Error(kZeroOutsideOption) when a0 = 0. Feasibility requires a valid
// pair (nonnegative prices, no dominance in [k]), monotone prices and net
// utilities, and the multiplier sign conditions p_i >= 1 + R on the top group
// and p_i <= 1 + R on the bottom group.
BoundaryCandidate JaptlmCandidate(const PricedInstance& instance, int k,
                                  int k1, int k2);

// Optimal prices for offer set [k].
// Throws Error(kNoFeasibleCandidate) when the dominance constraint binds and
// no boundary candidate is feasible.
PricingSolution SolveJaptlmK(const PricedInstance& instance, int k);

// Best of SolveJaptlmK over k = 1..n, ties to the smaller k. Values of k
// without a feasible candidate are skipped: their restricted optimum puts a
// zero price on the last product, and dropping it does better.
PricingSolution SolveJaptlm(const PricedInstance& instance);

// Products 1..k-1 share one price and product k gets its own; best over k.
PricingSolution QuasiSamePricePolicy(const PricedInstance& instance);

struct PricingInvariantReport {
  bool price_bound = false;        // every price >= revenue
  bool utility_order = false;      // offer set is a prefix [k]
  bool decreasing_prices = false;  // equal utilities get equal prices
  bool decreasing_net = false;
  bool valid_pair = false;
  bool AllPass() const {
    return price_bound && utility_order && decreasing_prices &&
           decreasing_net && valid_pair;
  }
};

inline constexpr double kInvariantTol = 1e-8;

PricingInvariantReport CheckPricingInvariants(const PricingSolution& solution,
                                              const PricedInstance& instance,
                                              double tol = kInvariantTol);

}  // namespace luceopt

#endif  // LUCEOPT_PRICING_HPP_
