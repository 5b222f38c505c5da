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

#ifndef LUCEOPT_ORACLES_HPP_
#define LUCEOPT_ORACLES_HPP_

// Exhaustive references used by the tests and the verify command. They share
// no code with the solvers beyond the instance types.

#include <cstdint>
#include <optional>
#include <vector>

#include "luceopt/model.hpp"

namespace luceopt {

struct OracleResult {
  double value = 0.0;
  Subset subset;              // assortment oracles
  std::vector<double> prices; // pricing oracle, one per product of [k]
  std::int64_t evaluations = 0;
};

inline constexpr int kOracleAssortmentLimit = 22;
inline constexpr int kOraclePricingLimit = 3;

// Enumerates every offer set S (with |S| <= capacity when given) and scores
// it by R(c(S)). Ties go to the lexicographically smallest S.
// Throws Error(kTooLarge) for n > 22.
OracleResult BruteForceAssortment(const Instance& instance,
                                  std::optional<int> capacity = std::nullopt);

inline constexpr std::int64_t kPricingGridBudget = 10'000'000;

// Grid search over p_i in [0, u_i + 10] for the offer set [k], keeping only
// points with no dominance inside [k], then pattern search with the step
// shrinking to 1e-6. The grid step starts at 0.01 and is widened just enough
// to keep the point count within kPricingGridBudget.
// Throws Error(kTooLarge) for k > 3 and Error(kZeroOutsideOption) for a0 = 0.
OracleResult NumericPricingOracle(const PricedInstance& instance, int k);

}  // namespace luceopt

#endif  // LUCEOPT_ORACLES_HPP_
