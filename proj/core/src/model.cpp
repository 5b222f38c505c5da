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

#include "luceopt/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "luceopt/error.hpp"

namespace luceopt {
namespace {

// The threshold test shared by every priced dominance check, so that
// SnapToValid and ConsiderationSetPriced agree bit for bit.
bool ThresholdDominates(double a_x, double a_y, double t) {
  return a_x > (1.0 + t) * a_y;
}

bool IsStrictlyIncreasing(const Subset& s) {
  return std::adjacent_find(s.begin(), s.end(), [](int a, int b) {
           return a >= b;
         }) == s.end();
}

void CheckSubset(const Subset& s, int n) {
  if (!IsStrictlyIncreasing(s) || (!s.empty() && (s.front() < 0 ||
                                                   s.back() >= n))) {
    throw Error(ErrorCode::kIdOutOfRange,
                "subset must be strictly increasing product indices");
  }
}

}  // namespace

DominanceRelation::DominanceRelation(int n, std::vector<std::uint8_t> closure)
    : n_(n), closure_(std::move(closure)), dominators_(n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!Dominates(x, y)) continue;
      closure_edges_.push_back({x, y});
      dominators_[y].push_back(x);
      bool covered = true;
      for (int z = 0; z < n && covered; ++z) {
        if (Dominates(x, z) && Dominates(z, y)) covered = false;
      }
      if (covered) reduction_edges_.push_back({x, y});
    }
  }
}

DominanceRelation ValidatePartialOrder(std::span<const Edge> edges, int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidInput, "negative product count");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> closure(un * un, 0);
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw Error(ErrorCode::kIdOutOfRange,
                  "edge (" + std::to_string(e.from + 1) + "," +
                      std::to_string(e.to + 1) + ") outside 1.." +
                      std::to_string(n));
    }
    closure[e.from * un + e.to] = 1;
  }
  // Warshall.
  for (std::size_t k = 0; k < un; ++k) {
    for (std::size_t i = 0; i < un; ++i) {
      if (!closure[i * un + k]) continue;
      for (std::size_t j = 0; j < un; ++j) {
        if (closure[k * un + j]) closure[i * un + j] = 1;
      }
    }
  }
  // A transitive relation with (x,y) and (y,x) also holds (x,x), so the
  // diagonal catches both irreflexivity and antisymmetry violations.
  for (std::size_t i = 0; i < un; ++i) {
    if (closure[i * un + i]) {
      throw Error(ErrorCode::kCycle, "product " + std::to_string(i + 1) +
                                         " lies on a dominance cycle");
    }
  }
  return DominanceRelation(n, std::move(closure));
}

DominanceRelation DominanceRelation::Empty(int n) {
  return ValidatePartialOrder({}, n);
}

DominanceRelation ThresholdDominance(std::span<const double> attractiveness,
                                     double t) {
  if (!(t > 0.0)) {
    throw Error(ErrorCode::kNonPositiveInput, "threshold t must be > 0");
  }
  for (double a : attractiveness) {
    if (!(a > 0.0)) {
      throw Error(ErrorCode::kNonPositiveInput, "attractiveness must be > 0");
    }
  }
  const int n = static_cast<int>(attractiveness.size());
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (ThresholdDominates(attractiveness[x], attractiveness[y], t)) {
        edges.push_back({x, y});
      }
    }
  }
  return ValidatePartialOrder(edges, n);
}

Instance::Instance(std::vector<Product> products, double a0,
                   DominanceRelation dominance)
    : products_(std::move(products)), a0_(a0),
      dominance_(std::move(dominance)) {
  if (!(a0_ >= 0.0) || !std::isfinite(a0_)) {
    throw Error(ErrorCode::kInvalidInput, "a0 must be finite and >= 0");
  }
  for (std::size_t i = 0; i < products_.size(); ++i) {
    const Product& p = products_[i];
    if (!(p.attractiveness > 0.0) || !std::isfinite(p.attractiveness)) {
      throw Error(ErrorCode::kInvalidInput,
                  "product " + std::to_string(i + 1) +
                      ": attractiveness must be finite and > 0");
    }
    if (!(p.revenue >= 0.0) || !std::isfinite(p.revenue)) {
      throw Error(ErrorCode::kInvalidInput,
                  "product " + std::to_string(i + 1) +
                      ": revenue must be finite and >= 0");
    }
  }
  if (dominance_.size() != size()) {
    throw Error(ErrorCode::kInvalidInput,
                "dominance relation size does not match product count");
  }
}

std::vector<double> Instance::revenues() const {
  std::vector<double> out;
  out.reserve(products_.size());
  for (const Product& p : products_) out.push_back(p.revenue);
  return out;
}

std::vector<double> Instance::attractiveness() const {
  std::vector<double> out;
  out.reserve(products_.size());
  for (const Product& p : products_) out.push_back(p.attractiveness);
  return out;
}

PricedInstance::PricedInstance(std::vector<double> utilities, double t,
                               double a0)
    : utilities_(std::move(utilities)), t_(t), a0_(a0) {
  if (!(t_ > 0.0) || !std::isfinite(t_)) {
    throw Error(ErrorCode::kInvalidInput, "threshold t must be finite and > 0");
  }
  if (!(a0_ >= 0.0) || !std::isfinite(a0_)) {
    throw Error(ErrorCode::kInvalidInput, "a0 must be finite and >= 0");
  }
  for (std::size_t i = 0; i < utilities_.size(); ++i) {
    if (!std::isfinite(utilities_[i])) {
      throw Error(ErrorCode::kInvalidInput, "utilities must be finite");
    }
    if (i > 0 && utilities_[i] > utilities_[i - 1]) {
      throw Error(ErrorCode::kInvalidInput,
                  "utilities must be sorted non-increasing");
    }
  }
}

Subset ConsiderationSet(const Subset& s, const Instance& instance) {
  CheckSubset(s, instance.size());
  const DominanceRelation& rel = instance.dominance();
  Subset out;
  for (int x : s) {
    const bool dominated = std::any_of(s.begin(), s.end(), [&](int y) {
      return rel.Dominates(y, x);
    });
    if (!dominated) out.push_back(x);
  }
  return out;
}

double ChoiceProbability(int x, const Subset& s, const Instance& instance) {
  const Subset c = ConsiderationSet(s, instance);
  double denom = instance.a0();
  for (int y : c) denom += instance.product(y).attractiveness;
  if (denom <= 0.0) return 0.0;
  if (x == kOutsideOption) return instance.a0() / denom;
  if (!std::binary_search(c.begin(), c.end(), x)) return 0.0;
  return instance.product(x).attractiveness / denom;
}

double AntichainRevenue(const Subset& s, const Instance& instance) {
  double num = 0.0;
  double denom = instance.a0();
  for (int i : s) {
    const Product& p = instance.product(i);
    num += p.revenue * p.attractiveness;
    denom += p.attractiveness;
  }
  return denom > 0.0 ? num / denom : 0.0;
}

double ExpectedRevenue(const Subset& s, const Instance& instance) {
  return AntichainRevenue(ConsiderationSet(s, instance), instance);
}

bool IsAntichain(const Subset& s, const DominanceRelation& relation) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (relation.Comparable(s[i], s[j])) return false;
    }
  }
  return true;
}

namespace {

std::vector<double> PricedAttractiveness(const Subset& s,
                                         const PriceVector& prices,
                                         const PricedInstance& instance) {
  CheckSubset(s, instance.size());
  if (prices.size() != static_cast<std::size_t>(instance.size())) {
    throw Error(ErrorCode::kInvalidInput,
                "price vector length does not match product count");
  }
  std::vector<double> a;
  a.reserve(s.size());
  for (int i : s) {
    if (!std::isfinite(prices[i])) {
      throw Error(ErrorCode::kInvalidInput,
                  "offered product " + std::to_string(i + 1) +
                      " has no finite price");
    }
    a.push_back(std::exp(instance.utility(i) - prices[i]));
  }
  return a;
}

}  // namespace

Subset ConsiderationSetPriced(const Subset& s, const PriceVector& prices,
                              const PricedInstance& instance) {
  const std::vector<double> a = PricedAttractiveness(s, prices, instance);
  const double a_max =
      a.empty() ? 0.0 : *std::max_element(a.begin(), a.end());
  Subset out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!ThresholdDominates(a_max, a[j], instance.t())) out.push_back(s[j]);
  }
  return out;
}

double ExpectedRevenuePriced(const Subset& s, const PriceVector& prices,
                             const PricedInstance& instance) {
  const Subset c = ConsiderationSetPriced(s, prices, instance);
  double num = 0.0;
  double denom = instance.a0();
  for (int i : c) {
    const double a = std::exp(instance.utility(i) - prices[i]);
    num += prices[i] * a;
    denom += a;
  }
  return denom > 0.0 ? num / denom : 0.0;
}

bool IsValidPair(const Subset& s, const PriceVector& prices,
                 const PricedInstance& instance) {
  if (prices.size() != static_cast<std::size_t>(instance.size())) return false;
  Subset offered;
  for (int i = 0; i < instance.size(); ++i) {
    if (prices[i] < kNotOffered) {
      if (prices[i] < 0.0) return false;
      offered.push_back(i);
    }
  }
  if (offered != s) return false;
  return ConsiderationSetPriced(s, prices, instance) == s;
}

bool SnapToValid(const Subset& s, PriceVector& prices,
                 const PricedInstance& instance, double rel_tol) {
  constexpr int kMaxNudges = 64;
  PriceVector work = prices;
  const double t = instance.t();
  for (int round = 0; round < 16; ++round) {
    const std::vector<double> a = PricedAttractiveness(s, work, instance);
    if (a.empty()) break;
    const double a_max = *std::max_element(a.begin(), a.end());
    const double a_min = *std::min_element(a.begin(), a.end());
    if (!ThresholdDominates(a_max, a_min, t)) {
      prices = std::move(work);
      return true;
    }
    if (a_max / ((1.0 + t) * a_min) - 1.0 > rel_tol) return false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!ThresholdDominates(a_max, a[j], t)) continue;
      const int i = s[j];
      double p = instance.utility(i) - (std::log(a_max) - std::log1p(t));
      p = std::min(p, work[i]);
      int nudges = 0;
      while (p >= 0.0 && nudges++ < kMaxNudges &&
             ThresholdDominates(a_max, std::exp(instance.utility(i) - p), t)) {
        p = std::nextafter(p, -kNotOffered);
      }
      if (p >= 0.0 && nudges <= kMaxNudges) work[i] = p;
    }
    // Products that cannot be made cheaper enough pull the top down instead.
    const std::vector<double> b = PricedAttractiveness(s, work, instance);
    const double b_min = *std::min_element(b.begin(), b.end());
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!ThresholdDominates(b[j], b_min, t)) continue;
      const int i = s[j];
      double p = instance.utility(i) - (std::log(b_min) + std::log1p(t));
      p = std::max(p, work[i]);
      int nudges = 0;
      while (nudges++ < kMaxNudges &&
             ThresholdDominates(std::exp(instance.utility(i) - p), b_min, t)) {
        p = std::nextafter(p, kNotOffered);
      }
      work[i] = p;
    }
  }
  return false;
}

}  // namespace luceopt
