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

#ifndef LUCEOPT_ASSORTMENT_HPP_
#define LUCEOPT_ASSORTMENT_HPP_

#include <functional>
#include <span>
#include <vector>

#include "luceopt/antichain_flow.hpp"
#include "luceopt/model.hpp"

namespace luceopt {

inline constexpr double kDefaultEps = 1e-9;

struct AssortmentSolution {
  Subset assortment;
  double revenue = 0.0;
  int iterations = 0;
  // Final value of max_S sum_i (num_i - lambda den_i) minus lambda den_0;
  // non-positive up to eps at an optimum.
  double certificate_gap = 0.0;
  std::vector<double> lambdas;  // one entry per iteration, strictly increasing
};

// Linear subproblem: given per-item weights, return a feasible set that
// maximizes their sum.
using LinearMaximizer = std::function<AntichainResult(std::span<const double>)>;

// Maximizes sum_{i in S} num_i / (sum_{i in S} den_i + den0) over the sets the
// maximizer can return, starting from the feasible set `start`. Iterates
// lambda <- ratio(S) until the subproblem optimum with weights
// num_i - lambda den_i is at most lambda den0 + eps max(1, lambda).
AssortmentSolution MaximizeRatio(std::span<const double> num,
                                 std::span<const double> den, double den0,
                                 const Subset& start,
                                 const LinearMaximizer& maximizer,
                                 double eps = kDefaultEps);

// Unconstrained assortment under the two-stage model: the ratio driver over
// maximum-weight antichain subproblems.
AssortmentSolution SolveAssortment2slm(const Instance& instance,
                                       double eps = kDefaultEps);

// General attraction model: an offered product j weighs v_j; an unoffered one
// adds w_j to the outside option, 0 <= w_j <= v_j.
struct GamProduct {
  double revenue = 0.0;
  double v = 1.0;
  double w = 0.0;
};

// sum r_j v_j / (sum_{j in S} (v_j - w_j) + v0 + sum_all w_k), for an
// antichain S.
double GamRevenue(const Subset& s, std::span<const GamProduct> products,
                  double v0);

// Throws Error(kWeightOrder) if some w_j > v_j or w_j < 0.
AssortmentSolution SolveAssortmentGam(std::span<const GamProduct> products,
                                      double v0,
                                      const DominanceRelation& dominance,
                                      double eps = kDefaultEps);

// Best prefix of the products sorted by decreasing revenue (ties by index);
// the assortment reported is the consideration set of that prefix.
AssortmentSolution RevenueOrderedHeuristic(const Instance& instance);

}  // namespace luceopt

#endif  // LUCEOPT_ASSORTMENT_HPP_
