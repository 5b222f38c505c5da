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

#include "luceopt/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "luceopt/error.hpp"

namespace luceopt {
namespace {

Subset MaskToSubset(std::uint32_t mask) {
  Subset s;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) s.push_back(i);
  }
  return s;
}

// Revenue of net utilities v under the threshold rule, or -1 when some
// product of the set is dominated.
struct PriceEvaluator {
  int k;
  double a0;
  double log1pt;
  const double* u;

  double operator()(const double* p) const {
    double vmax = -1e300;
    double vmin = 1e300;
    double num = 0.0;
    double den = a0;
    for (int i = 0; i < k; ++i) {
      const double v = u[i] - p[i];
      vmax = std::max(vmax, v);
      vmin = std::min(vmin, v);
      const double a = std::exp(v);
      num += p[i] * a;
      den += a;
    }
    if (vmax - vmin > log1pt) return -1.0;
    return num / den;
  }
};

}  // namespace

OracleResult BruteForceAssortment(const Instance& instance,
                                  std::optional<int> capacity) {
  const int n = instance.size();
  if (n > kOracleAssortmentLimit) {
    throw Error(ErrorCode::kTooLarge, "brute-force oracle needs n <= " +
                                          std::to_string(kOracleAssortmentLimit));
  }
  const int cap = capacity ? *capacity : n;
  if (cap < 0) throw Error(ErrorCode::kInvalidInput, "capacity must be >= 0");
  std::vector<std::uint32_t> dominated_by(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (instance.dominance().Dominates(x, y)) dominated_by[y] |= 1u << x;
    }
  }
  OracleResult best;
  std::uint32_t best_mask = 0;
  const std::uint32_t end = n == 0 ? 1u : (1u << n);
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (std::popcount(mask) > cap) continue;
    ++best.evaluations;
    double num = 0.0;
    double den = instance.a0();
    for (int i = 0; i < n; ++i) {
      if ((mask >> i & 1u) && (dominated_by[i] & mask) == 0) {
        const Product& p = instance.product(i);
        num += p.revenue * p.attractiveness;
        den += p.attractiveness;
      }
    }
    const double value = den > 0.0 ? num / den : 0.0;
    bool better = value > best.value;
    if (!better && value == best.value && mask != best_mask) {
      better = MaskToSubset(mask) < MaskToSubset(best_mask);
    }
    if (better) {
      best.value = value;
      best_mask = mask;
    }
  }
  best.subset = MaskToSubset(best_mask);
  return best;
}

OracleResult NumericPricingOracle(const PricedInstance& instance, int k) {
  if (k > kOraclePricingLimit) {
    throw Error(ErrorCode::kTooLarge, "pricing oracle supports k <= 3");
  }
  if (k < 1 || k > instance.size()) {
    throw Error(ErrorCode::kInvalidInput, "k out of range");
  }
  if (!(instance.a0() > 0.0)) {
    throw Error(ErrorCode::kZeroOutsideOption, "pricing oracle needs a0 > 0");
  }
  const PriceEvaluator eval{k, instance.a0(), std::log1p(instance.t()),
                            instance.utilities().data()};
  std::array<double, 3> width{};
  for (int i = 0; i < k; ++i) {
    width[i] = std::max(0.0, instance.utility(i)) + 10.0;
  }
  double step = 0.01;
  std::array<std::int64_t, 3> count{1, 1, 1};
  for (;;) {
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i) {
      count[i] = static_cast<std::int64_t>(std::floor(width[i] / step)) + 1;
      total *= count[i];
    }
    if (total <= kPricingGridBudget) break;
    step *= 1.01;
  }
  OracleResult best;
  best.value = -1.0;
  std::array<double, 3> p{};
  std::array<double, 3> arg{};
  std::array<std::int64_t, 3> idx{};
  // Odometer over the grid.
  for (;;) {
    for (int i = 0; i < k; ++i) p[i] = idx[i] * step;
    ++best.evaluations;
    const double value = eval(p.data());
    if (value > best.value) {
      best.value = value;
      arg = p;
    }
    int d = k - 1;
    while (d >= 0 && ++idx[d] == count[d]) idx[d--] = 0;
    if (d < 0) break;
  }
  // Pattern search over all directions in {-1, 0, 1}^k.
  int directions = 1;
  for (int i = 0; i < k; ++i) directions *= 3;
  for (double h = step; h >= 1e-6;) {
    bool moved = false;
    for (int code = 0; code < directions; ++code) {
      std::array<double, 3> q = arg;
      int c = code;
      bool zero = true;
      bool inside = true;
      for (int i = 0; i < k; ++i) {
        const int dir = c % 3 - 1;
        c /= 3;
        if (dir != 0) zero = false;
        q[i] += dir * h;
        if (q[i] < 0.0) inside = false;
      }
      if (zero || !inside) continue;
      const double value = eval(q.data());
      if (value > best.value) {
        best.value = value;
        arg = q;
        moved = true;
      }
    }
    if (!moved) h *= 0.5;
  }
  best.prices.assign(arg.begin(), arg.begin() + k);
  best.subset.resize(k);
  for (int i = 0; i < k; ++i) best.subset[i] = i;
  return best;
}

}  // namespace luceopt
