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

#include "luceopt/assortment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "luceopt/error.hpp"

namespace luceopt {
namespace {

// Bounds the loop against rounding stalls; each iterate is a distinct
// feasible set, so exact arithmetic would never approach this.
constexpr int kMaxIterations = 10000;

double Ratio(const Subset& s, std::span<const double> num,
             std::span<const double> den, double den0) {
  double top = 0.0;
  double bottom = den0;
  for (int i : s) {
    top += num[i];
    bottom += den[i];
  }
  return bottom > 0.0 ? top / bottom : 0.0;
}

}  // namespace

AssortmentSolution MaximizeRatio(std::span<const double> num,
                                 std::span<const double> den, double den0,
                                 const Subset& start,
                                 const LinearMaximizer& maximizer,
                                 double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kInvalidInput, "eps must be > 0");
  AssortmentSolution out;
  out.assortment = start;
  double lambda = std::max(0.0, Ratio(start, num, den, den0));
  if (lambda == 0.0) out.assortment.clear();
  std::vector<double> weights(num.size());
  for (;;) {
    out.lambdas.push_back(lambda);
    ++out.iterations;
    for (std::size_t i = 0; i < num.size(); ++i) {
      weights[i] = num[i] - lambda * den[i];
    }
    const AntichainResult best = maximizer(weights);
    out.certificate_gap = best.value - lambda * den0;
    if (out.certificate_gap <= eps * std::max(1.0, lambda)) break;
    const double next = Ratio(best.antichain, num, den, den0);
    if (!(next > lambda) || out.iterations >= kMaxIterations) break;
    lambda = next;
    out.assortment = best.antichain;
  }
  out.revenue = lambda;
  return out;
}

AssortmentSolution SolveAssortment2slm(const Instance& instance, double eps) {
  const int n = instance.size();
  std::vector<double> num(n), den(n);
  Subset start;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    const Product& p = instance.product(i);
    num[i] = p.revenue * p.attractiveness;
    den[i] = p.attractiveness;
    const double single = num[i] / (den[i] + instance.a0());
    if (single > best) {
      best = single;
      start = {i};
    }
  }
  const DominanceRelation& rel = instance.dominance();
  return MaximizeRatio(
      num, den, instance.a0(), start,
      [&rel](std::span<const double> w) { return MaxWeightAntichain(rel, w); },
      eps);
}

double GamRevenue(const Subset& s, std::span<const GamProduct> products,
                  double v0) {
  double top = 0.0;
  double bottom = v0;
  for (const GamProduct& p : products) bottom += p.w;
  for (int j : s) {
    top += products[j].revenue * products[j].v;
    bottom += products[j].v - products[j].w;
  }
  return bottom > 0.0 ? top / bottom : 0.0;
}

AssortmentSolution SolveAssortmentGam(std::span<const GamProduct> products,
                                      double v0,
                                      const DominanceRelation& dominance,
                                      double eps) {
  const int n = static_cast<int>(products.size());
  if (dominance.size() != n) {
    throw Error(ErrorCode::kInvalidInput,
                "dominance relation size does not match product count");
  }
  if (!(v0 >= 0.0)) throw Error(ErrorCode::kInvalidInput, "v0 must be >= 0");
  double den0 = v0;
  std::vector<double> num(n), den(n);
  for (int j = 0; j < n; ++j) {
    const GamProduct& p = products[j];
    if (!(p.v > 0.0) || !(p.revenue >= 0.0)) {
      throw Error(ErrorCode::kInvalidInput,
                  "GAM products need v > 0 and revenue >= 0");
    }
    if (!(p.w >= 0.0) || p.w > p.v) {
      throw Error(ErrorCode::kWeightOrder,
                  "product " + std::to_string(j + 1) + " needs 0 <= w <= v");
    }
    num[j] = p.revenue * p.v;
    den[j] = p.v - p.w;
    den0 += p.w;
  }
  Subset start;
  double best = -1.0;
  for (int j = 0; j < n; ++j) {
    const double single = num[j] / (den[j] + den0);
    if (single > best) {
      best = single;
      start = {j};
    }
  }
  return MaximizeRatio(
      num, den, den0, start,
      [&dominance](std::span<const double> w) {
        return MaxWeightAntichain(dominance, w);
      },
      eps);
}

AssortmentSolution RevenueOrderedHeuristic(const Instance& instance) {
  const int n = instance.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.product(a).revenue > instance.product(b).revenue;
  });
  AssortmentSolution out;
  Subset prefix;
  for (int k = 0; k < n; ++k) {
    prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), order[k]),
                  order[k]);
    const double revenue = ExpectedRevenue(prefix, instance);
    ++out.iterations;
    if (revenue > out.revenue || k == 0) {
      out.revenue = revenue;
      out.assortment = ConsiderationSet(prefix, instance);
    }
  }
  return out;
}

}  // namespace luceopt
