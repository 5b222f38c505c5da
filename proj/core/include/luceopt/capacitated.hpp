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

#ifndef LUCEOPT_CAPACITATED_HPP_
#define LUCEOPT_CAPACITATED_HPP_

// Assortment optimization with a cardinality limit C. The general problem is
// NP-hard; exact polynomial methods cover tree orders and
// attractiveness-correlated orders, everything else falls back to
// enumeration.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "luceopt/antichain_flow.hpp"
#include "luceopt/assortment.hpp"
#include "luceopt/model.hpp"

namespace luceopt {

inline constexpr int kBruteForceLimit = 22;

// Exact optimum over antichains with at most `capacity` products; ties go to
// the lexicographically smallest set. Throws Error(kTooLarge) for n > 22 and
// Error(kInvalidInput) for capacity < 1.
AssortmentSolution SolveCapacitatedBruteforce(const Instance& instance,
                                              int capacity);

// Parent of every node in the transitive reduction when each node has at most
// one parent; -1 marks roots.
std::optional<std::vector<int>> IsForestReducible(
    const DominanceRelation& relation);

// Maximum weight of an antichain with at most `capacity` nodes of the forest
// given by `parents`. Nodes of non-positive weight are removed and their
// children reattached to the nearest kept ancestor.
// Throws Error(kNotATree) if `parents` contains a cycle or a bad index.
AntichainResult TreeDpMaxAtt(std::span<const int> parents,
                             std::span<const double> weights, int capacity);

// Throws Error(kNotATree) when the relation is not forest-reducible.
AssortmentSolution SolveCapacitatedTree(const Instance& instance, int capacity,
                                        double eps = kDefaultEps);

// x > y implies a_x > a_y, and x > y with a_z > a_x implies z > y.
bool IsAttractivenessCorrelated(const Instance& instance);

// Capacitated MNL: no dominance among the products.
AssortmentSolution SolveCapacitatedMnl(std::span<const Product> products,
                                       double a0, int capacity,
                                       double eps = kDefaultEps);

// Best over k of the capacitated MNL optimum on
// X_k = {i : a_i <= a_k and k does not dominate i}.
// Throws Error(kNotAttractivenessCorrelated) unless the instance is
// attractiveness-correlated and consistent on attractiveness ties (x > y and
// a_z = a_x imply z > y), which keeps every X_k free of dominance.
AssortmentSolution SolveCapacitatedAttCorr(const Instance& instance,
                                           int capacity,
                                           double eps = kDefaultEps);

enum class CapacitatedMethod { kUnconstrained, kTree, kAttCorr, kBruteforce };

std::string_view CapacitatedMethodName(CapacitatedMethod method);

struct CapacitatedResult {
  AssortmentSolution solution;
  CapacitatedMethod method = CapacitatedMethod::kUnconstrained;
};

// Unconstrained when capacity is absent; otherwise tree, then
// attractiveness-correlated, then brute force for n <= 22.
// Throws Error(kProblemTooLarge) when no exact method applies.
CapacitatedResult SolveCapacitatedAuto(const Instance& instance,
                                       std::optional<int> capacity,
                                       double eps = kDefaultEps);

}  // namespace luceopt

#endif  // LUCEOPT_CAPACITATED_HPP_
