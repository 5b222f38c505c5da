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

#ifndef LUCEOPT_MODEL_HPP_
#define LUCEOPT_MODEL_HPP_

// Two-Stage Luce and Threshold Luce choice models.
//
// Products are addressed by 0-based index throughout the library; the JSON
// and CLI layers translate to the 1-based ids used in instance files. A
// Subset is a strictly increasing list of product indices.

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace luceopt {

using Subset = std::vector<int>;

// x dominates y.
struct Edge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A strict partial order over {0, ..., n-1}, stored as its transitive
// closure with the transitive reduction cached alongside.
class DominanceRelation {
 public:
  DominanceRelation() = default;

  // The relation with no comparable pairs.
  static DominanceRelation Empty(int n);

  int size() const { return n_; }
  bool Dominates(int x, int y) const {
    return closure_[static_cast<std::size_t>(x) * n_ + y] != 0;
  }
  bool Comparable(int x, int y) const {
    return Dominates(x, y) || Dominates(y, x);
  }
  bool empty() const { return closure_edges_.empty(); }

  const std::vector<Edge>& closure_edges() const { return closure_edges_; }
  const std::vector<Edge>& reduction_edges() const { return reduction_edges_; }

  // Products dominating y in the closure, ascending.
  const std::vector<int>& dominators(int y) const { return dominators_[y]; }

 private:
  friend DominanceRelation ValidatePartialOrder(std::span<const Edge>, int);

  // closure must already be transitive and irreflexive.
  DominanceRelation(int n, std::vector<std::uint8_t> closure);

  int n_ = 0;
  std::vector<std::uint8_t> closure_;
  std::vector<Edge> closure_edges_;
  std::vector<Edge> reduction_edges_;
  std::vector<std::vector<int>> dominators_;
};

// Builds the relation from an edge list: the edges are transitively closed,
// then checked for irreflexivity and antisymmetry.
// Throws Error(kIdOutOfRange) or Error(kCycle).
DominanceRelation ValidatePartialOrder(std::span<const Edge> edges, int n);

// x dominates y iff a_x > (1 + t) a_y. Ties at exactly (1 + t) a_y give no
// edge. Throws Error(kNonPositiveInput) unless every a > 0 and t > 0.
DominanceRelation ThresholdDominance(std::span<const double> attractiveness,
                                     double t);

struct Product {
  double revenue = 0.0;
  double attractiveness = 1.0;
};

class Instance {
 public:
  Instance() = default;
  // Throws Error(kInvalidInput) when a product has attractiveness <= 0 or
  // revenue < 0, a0 < 0, or the relation size differs from the product count.
  Instance(std::vector<Product> products, double a0,
           DominanceRelation dominance);

  int size() const { return static_cast<int>(products_.size()); }
  const std::vector<Product>& products() const { return products_; }
  const Product& product(int i) const { return products_[i]; }
  double a0() const { return a0_; }
  const DominanceRelation& dominance() const { return dominance_; }

  std::vector<double> revenues() const;
  std::vector<double> attractiveness() const;

 private:
  std::vector<Product> products_;
  double a0_ = 0.0;
  DominanceRelation dominance_;
};

// Threshold Luce instance with price-dependent attractiveness exp(u_i - p_i).
class PricedInstance {
 public:
  PricedInstance() = default;
  // Utilities must be sorted non-increasing, t > 0 and a0 >= 0; otherwise
  // throws Error(kInvalidInput).
  PricedInstance(std::vector<double> utilities, double t, double a0);

  int size() const { return static_cast<int>(utilities_.size()); }
  const std::vector<double>& utilities() const { return utilities_; }
  double utility(int i) const { return utilities_[i]; }
  double t() const { return t_; }
  double a0() const { return a0_; }

 private:
  std::vector<double> utilities_;
  double t_ = 1.0;
  double a0_ = 1.0;
};

// One entry per product; kNotOffered marks a product that is not offered.
using PriceVector = std::vector<double>;
inline constexpr double kNotOffered = std::numeric_limits<double>::infinity();

// Outside option for ChoiceProbability.
inline constexpr int kOutsideOption = -1;

// Undominated members of s: c(S) = {x in S | no y in S with y > x}.
Subset ConsiderationSet(const Subset& s, const Instance& instance);

// rho(x, S). x may be kOutsideOption. Returns 0 for products outside c(S).
double ChoiceProbability(int x, const Subset& s, const Instance& instance);

// R(S) = sum over c(S) of rho(i, S) r_i. Zero for the empty set.
double ExpectedRevenue(const Subset& s, const Instance& instance);

// Revenue of an antichain without recomputing c(S).
double AntichainRevenue(const Subset& s, const Instance& instance);

bool IsAntichain(const Subset& s, const DominanceRelation& relation);

// c(S, p) under the threshold rule applied to exp(u_i - p_i). Prices must be
// finite on s.
Subset ConsiderationSetPriced(const Subset& s, const PriceVector& prices,
                              const PricedInstance& instance);

// R(S, p) with p_i as the per-unit revenue of product i.
double ExpectedRevenuePriced(const Subset& s, const PriceVector& prices,
                             const PricedInstance& instance);

// (S, p) is valid iff S is exactly the set of finite prices and c(S, p) = S.
bool IsValidPair(const Subset& s, const PriceVector& prices,
                 const PricedInstance& instance);

// Repairs dominance that exists only through floating-point rounding
// (relative excess at most rel_tol): dominated products get slightly lower
// prices, or, where that would make a price negative, their dominators get
// slightly higher ones. Returns false, leaving prices untouched, if a
// violation exceeds rel_tol or cannot be repaired.
bool SnapToValid(const Subset& s, PriceVector& prices,
                 const PricedInstance& instance, double rel_tol = 1e-9);

}  // namespace luceopt

#endif  // LUCEOPT_MODEL_HPP_
