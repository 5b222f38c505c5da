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

#ifndef LUCEOPT_TESTS_TEST_UTIL_HPP_
#define LUCEOPT_TESTS_TEST_UTIL_HPP_

// Worked-example instances and small independent references shared by the
// unit tests and the acceptance binary. Nothing here calls solver code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "luceopt/model.hpp"

namespace luceopt::testing {

// r = (88, 47, 46), a = (13, 26, 15), a0 = 55; product 2 dominates 1 and 3.
inline Instance RevOrdFail() {
  return Instance({{88, 13}, {47, 26}, {46, 15}}, 55.0,
                  ValidatePartialOrder(std::vector<Edge>{{1, 0}, {1, 2}}, 3));
}

// a = (5, 4, 3, 3), t = 0.4, a0 = 1, unit revenues.
inline Instance RegViolation() {
  const std::vector<double> a = {5, 4, 3, 3};
  return Instance({{1, 5}, {1, 4}, {1, 3}, {1, 3}}, 1.0,
                  ThresholdDominance(a, 0.4));
}

// a = (12, 8, 6, 3, 2), t = 0.4.
inline std::vector<double> FiveProductAttractiveness() {
  return {12, 8, 6, 3, 2};
}
inline DominanceRelation FiveProductRelation() {
  return ThresholdDominance(FiveProductAttractiveness(), 0.4);
}

// u_1 = 2 followed by ten products with u = 1; t = 1, a0 = 1.
inline PricedInstance FixedPriceNum() {
  std::vector<double> u(11, 1.0);
  u[0] = 2.0;
  return PricedInstance(u, 1.0, 1.0);
}

// One product of utility u and n clones of utility alpha u.
inline PricedInstance FixedPriceBad(int n, double u = 2.0, double alpha = 0.5,
                                    double t = 1.0) {
  std::vector<double> util(n + 1, alpha * u);
  util[0] = u;
  return PricedInstance(util, t, 1.0);
}

// W(x) for x up to about 5 by the damped fixed point w = x e^{-w}.
inline double FixedPointW(double x) {
  double w = x < 1.0 ? x : std::log(x);
  for (int i = 0; i < 100000; ++i) {
    const double next = 0.5 * w + 0.5 * x * std::exp(-w);
    if (std::fabs(next - w) < 1e-16) return next;
    w = next;
  }
  return w;
}

// Every antichain of rel by bitmask; returns the best weight sum.
inline double EnumerateAntichainValue(const DominanceRelation& rel,
                                      const std::vector<double>& w) {
  const int n = rel.size();
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    double sum = 0.0;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      sum += w[i];
      for (int j = 0; j < n && ok; ++j) {
        if ((mask >> j & 1u) && rel.Dominates(i, j)) ok = false;
      }
    }
    if (ok) best = std::max(best, sum);
  }
  return best;
}

// Random strict partial order: edges i -> j (i < j in a random permutation)
// with probability p, transitively closed.
inline DominanceRelation RandomOrder(int n, double p, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({perm[i], perm[j]});
    }
  }
  return ValidatePartialOrder(edges, n);
}

inline bool RelClose(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(1.0, std::fabs(b));
}

}  // namespace luceopt::testing

#endif  // LUCEOPT_TESTS_TEST_UTIL_HPP_
