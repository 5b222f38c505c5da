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

#include "luceopt/capacitated.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "luceopt/error.hpp"

namespace luceopt {
namespace {

int CheckCapacity(int capacity, int n) {
  if (capacity < 1) {
    throw Error(ErrorCode::kInvalidInput,
                "capacity must be >= 1, got " + std::to_string(capacity));
  }
  return std::min(capacity, n);
}

struct RatioTerms {
  std::vector<double> num;
  std::vector<double> den;
  Subset start;  // best singleton
};

RatioTerms MakeRatioTerms(const Instance& instance) {
  RatioTerms terms;
  const int n = instance.size();
  terms.num.resize(n);
  terms.den.resize(n);
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    const Product& p = instance.product(i);
    terms.num[i] = p.revenue * p.attractiveness;
    terms.den[i] = p.attractiveness;
    const double single = terms.num[i] / (terms.den[i] + instance.a0());
    if (single > best) {
      best = single;
      terms.start = {i};
    }
  }
  return terms;
}

bool TieConsistent(const Instance& instance) {
  const DominanceRelation& rel = instance.dominance();
  for (const Edge& e : rel.closure_edges()) {
    const double ax = instance.product(e.from).attractiveness;
    for (int z = 0; z < instance.size(); ++z) {
      if (z != e.from && instance.product(z).attractiveness == ax &&
          !rel.Dominates(z, e.to)) {
        return false;
      }
    }
  }
  return true;
}

// Knapsack-style DP over a forest; see TreeDpMaxAtt.
class TreeDp {
 public:
  TreeDp(std::span<const int> parents, std::span<const double> weights,
         int capacity)
      : weights_(weights), capacity_(capacity) {
    const int n = static_cast<int>(parents.size());
    children_.resize(n + 1);
    tables_.resize(n + 1);
    const int root = n;
    for (int v = 0; v < n; ++v) {
      if (!(weights[v] > 0.0)) continue;
      int up = parents[v];
      while (up >= 0 && !(weights[up] > 0.0)) up = parents[up];
      children_[up < 0 ? root : up].push_back(v);
    }
    for (auto& ch : children_) {
      std::sort(ch.begin(), ch.end(), [&](int a, int b) {
        if (weights_[a] != weights_[b]) return weights_[a] > weights_[b];
        return a < b;
      });
    }
    // Post-order without recursion.
    std::vector<std::pair<int, bool>> stack = {{root, false}};
    while (!stack.empty()) {
      auto [v, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        Combine(v, v == root ? 0.0 : weights_[v]);
        continue;
      }
      stack.push_back({v, true});
      for (int c : children_[v]) stack.push_back({c, false});
    }
  }

  double Value() const { return Get(tables_.back().best, capacity_); }

  Subset Recover() const {
    Subset out;
    Collect(static_cast<int>(tables_.size()) - 1, capacity_, &out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Table {
    std::vector<double> best;  // A(v, c)
    std::vector<bool> self;    // A(v, c) is attained by v alone
    // merged[j] is A+ over the first j + 1 children; split[j][c] is the
    // capacity handed to child j.
    std::vector<std::vector<double>> merged;
    std::vector<std::vector<int>> split;
  };

  static double Get(const std::vector<double>& t, int c) {
    return t[std::min<std::size_t>(c, t.size() - 1)];
  }

  void Combine(int v, double self_weight) {
    Table& tb = tables_[v];
    std::vector<double> acc = {0.0};
    for (int child : children_[v]) {
      const std::vector<double>& a = tables_[child].best;
      const int size = std::min<int>(
          capacity_, static_cast<int>(acc.size() + a.size()) - 2);
      std::vector<double> next(size + 1);
      std::vector<int> split(size + 1, 0);
      for (int c = 0; c <= size; ++c) {
        double best = Get(acc, c);
        const int top = std::min<int>(c, static_cast<int>(a.size()) - 1);
        for (int n2 = 1; n2 <= top; ++n2) {
          const double value = Get(acc, c - n2) + a[n2];
          if (value > best) {
            best = value;
            split[c] = n2;
          }
        }
        next[c] = best;
      }
      acc = next;
      tb.merged.push_back(std::move(next));
      tb.split.push_back(std::move(split));
    }
    const int size = std::min<int>(capacity_, static_cast<int>(acc.size()));
    tb.best.assign(size + 1, 0.0);
    tb.self.assign(size + 1, false);
    for (int c = 1; c <= size; ++c) {
      const double inner = Get(acc, c);
      if (self_weight > inner) {
        tb.best[c] = self_weight;
        tb.self[c] = true;
      } else {
        tb.best[c] = inner;
      }
    }
  }

  void Collect(int v, int c, Subset* out) const {
    const Table& tb = tables_[v];
    c = std::min<int>(c, static_cast<int>(tb.best.size()) - 1);
    if (c <= 0) return;
    if (tb.self[c]) {
      out->push_back(v);
      return;
    }
    for (int j = static_cast<int>(children_[v].size()) - 1; j >= 0; --j) {
      c = std::min<int>(c, static_cast<int>(tb.merged[j].size()) - 1);
      const int n2 = tb.split[j][c];
      Collect(children_[v][j], n2, out);
      c -= n2;
    }
  }

  std::span<const double> weights_;
  int capacity_;
  std::vector<std::vector<int>> children_;
  std::vector<Table> tables_;
};

}  // namespace

AssortmentSolution SolveCapacitatedBruteforce(const Instance& instance,
                                              int capacity) {
  const int n = instance.size();
  if (n > kBruteForceLimit) {
    throw Error(ErrorCode::kTooLarge,
                "brute force needs n <= " + std::to_string(kBruteForceLimit));
  }
  const int cap = CheckCapacity(capacity, n);
  const DominanceRelation& rel = instance.dominance();
  std::vector<std::uint32_t> comparable(n, 0);
  for (const Edge& e : rel.closure_edges()) {
    comparable[e.from] |= 1u << e.to;
    comparable[e.to] |= 1u << e.from;
  }
  AssortmentSolution best;
  Subset current;
  // Elements are added in increasing order, so sets are visited in
  // lexicographic order and strict improvement keeps the smallest tie.
  auto dfs = [&](auto&& self, int next, std::uint32_t blocked, double num,
                 double den) -> void {
    ++best.iterations;
    const double total = den + instance.a0();
    const double revenue = total > 0.0 ? num / total : 0.0;
    if (revenue > best.revenue) {
      best.revenue = revenue;
      best.assortment = current;
    }
    if (static_cast<int>(current.size()) == cap) return;
    for (int i = next; i < n; ++i) {
      if (blocked & (1u << i)) continue;
      const Product& p = instance.product(i);
      current.push_back(i);
      self(self, i + 1, blocked | comparable[i], num + p.revenue * p.attractiveness,
           den + p.attractiveness);
      current.pop_back();
    }
  };
  dfs(dfs, 0, 0u, 0.0, 0.0);
  best.revenue = AntichainRevenue(best.assortment, instance);
  return best;
}

std::optional<std::vector<int>> IsForestReducible(
    const DominanceRelation& relation) {
  std::vector<int> parents(relation.size(), -1);
  for (const Edge& e : relation.reduction_edges()) {
    if (parents[e.to] != -1) return std::nullopt;
    parents[e.to] = e.from;
  }
  return parents;
}

AntichainResult TreeDpMaxAtt(std::span<const int> parents,
                             std::span<const double> weights, int capacity) {
  const int n = static_cast<int>(parents.size());
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::kInvalidInput, "weights and parents differ in size");
  }
  // 0 unvisited, 1 on the current path, 2 known to reach a root.
  std::vector<std::uint8_t> state(n, 0);
  for (int v = 0; v < n; ++v) {
    std::vector<int> path;
    int u = v;
    while (u >= 0 && state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      const int p = parents[u];
      if (p < -1 || p >= n) {
        throw Error(ErrorCode::kNotATree,
                    "parent index out of range at node " + std::to_string(u));
      }
      u = p;
    }
    if (u >= 0 && state[u] == 1) {
      throw Error(ErrorCode::kNotATree, "parent array contains a cycle");
    }
    for (int w : path) state[w] = 2;
  }
  AntichainResult out;
  if (capacity <= 0 || n == 0) return out;
  const TreeDp dp(parents, weights, std::min(capacity, n));
  out.antichain = dp.Recover();
  out.flow_value = dp.Value();
  for (int v : out.antichain) out.value += weights[v];
  return out;
}

AssortmentSolution SolveCapacitatedTree(const Instance& instance, int capacity,
                                        double eps) {
  const int cap = CheckCapacity(capacity, instance.size());
  const std::optional<std::vector<int>> parents =
      IsForestReducible(instance.dominance());
  if (!parents) {
    throw Error(ErrorCode::kNotATree,
                "transitive reduction has a node with two parents");
  }
  const RatioTerms terms = MakeRatioTerms(instance);
  return MaximizeRatio(
      terms.num, terms.den, instance.a0(), terms.start,
      [&](std::span<const double> w) { return TreeDpMaxAtt(*parents, w, cap); },
      eps);
}

bool IsAttractivenessCorrelated(const Instance& instance) {
  const DominanceRelation& rel = instance.dominance();
  for (const Edge& e : rel.closure_edges()) {
    const double ax = instance.product(e.from).attractiveness;
    if (!(ax > instance.product(e.to).attractiveness)) return false;
    for (int z = 0; z < instance.size(); ++z) {
      if (instance.product(z).attractiveness > ax && !rel.Dominates(z, e.to)) {
        return false;
      }
    }
  }
  return true;
}

AssortmentSolution SolveCapacitatedMnl(std::span<const Product> products,
                                       double a0, int capacity, double eps) {
  const int n = static_cast<int>(products.size());
  const int cap = CheckCapacity(capacity, n);
  std::vector<double> num(n), den(n);
  Subset start;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    num[i] = products[i].revenue * products[i].attractiveness;
    den[i] = products[i].attractiveness;
    const double single = num[i] / (den[i] + a0);
    if (single > best) {
      best = single;
      start = {i};
    }
  }
  std::vector<int> order(n);
  return MaximizeRatio(
      num, den, a0, start,
      [&](std::span<const double> w) {
        order.clear();
        for (int i = 0; i < n; ++i) {
          if (w[i] > 0.0) order.push_back(i);
        }
        const int take = std::min<int>(cap, static_cast<int>(order.size()));
        std::partial_sort(order.begin(), order.begin() + take, order.end(),
                          [&](int a, int b) {
                            if (w[a] != w[b]) return w[a] > w[b];
                            return a < b;
                          });
        AntichainResult r;
        r.antichain.assign(order.begin(), order.begin() + take);
        std::sort(r.antichain.begin(), r.antichain.end());
        for (int i : r.antichain) r.value += w[i];
        return r;
      },
      eps);
}

AssortmentSolution SolveCapacitatedAttCorr(const Instance& instance,
                                           int capacity, double eps) {
  const int n = instance.size();
  const int cap = CheckCapacity(capacity, n);
  if (!IsAttractivenessCorrelated(instance)) {
    throw Error(ErrorCode::kNotAttractivenessCorrelated,
                "dominance is not attractiveness-correlated");
  }
  if (!TieConsistent(instance)) {
    throw Error(ErrorCode::kNotAttractivenessCorrelated,
                "products of equal attractiveness dominate different sets");
  }
  const DominanceRelation& rel = instance.dominance();
  AssortmentSolution best;
  bool have = false;
  std::vector<int> members;
  std::vector<Product> products;
  for (int k = 0; k < n; ++k) {
    const double ak = instance.product(k).attractiveness;
    members.clear();
    products.clear();
    for (int i = 0; i < n; ++i) {
      if (instance.product(i).attractiveness <= ak && !rel.Dominates(k, i)) {
        members.push_back(i);
        products.push_back(instance.product(i));
      }
    }
    AssortmentSolution sol = SolveCapacitatedMnl(products, instance.a0(), cap,
                                                 eps);
    for (int& i : sol.assortment) i = members[i];
    if (!have || sol.revenue > best.revenue) {
      const int total_iterations = best.iterations + sol.iterations;
      best = std::move(sol);
      best.iterations = total_iterations;
      have = true;
    } else {
      best.iterations += sol.iterations;
    }
  }
  best.revenue = AntichainRevenue(best.assortment, instance);
  return best;
}

std::string_view CapacitatedMethodName(CapacitatedMethod method) {
  switch (method) {
    case CapacitatedMethod::kUnconstrained:
      return "unconstrained";
    case CapacitatedMethod::kTree:
      return "tree";
    case CapacitatedMethod::kAttCorr:
      return "attcorr";
    case CapacitatedMethod::kBruteforce:
      return "bruteforce";
  }
  return "unknown";
}

CapacitatedResult SolveCapacitatedAuto(const Instance& instance,
                                       std::optional<int> capacity,
                                       double eps) {
  CapacitatedResult out;
  if (!capacity) {
    out.solution = SolveAssortment2slm(instance, eps);
    out.method = CapacitatedMethod::kUnconstrained;
    return out;
  }
  CheckCapacity(*capacity, instance.size());
  if (IsForestReducible(instance.dominance())) {
    out.solution = SolveCapacitatedTree(instance, *capacity, eps);
    out.method = CapacitatedMethod::kTree;
  } else if (IsAttractivenessCorrelated(instance) && TieConsistent(instance)) {
    out.solution = SolveCapacitatedAttCorr(instance, *capacity, eps);
    out.method = CapacitatedMethod::kAttCorr;
  } else if (instance.size() <= kBruteForceLimit) {
    out.solution = SolveCapacitatedBruteforce(instance, *capacity);
    out.method = CapacitatedMethod::kBruteforce;
  } else {
    throw Error(ErrorCode::kProblemTooLarge,
                "general capacitated problem is NP-hard; no exact method for "
                "n = " + std::to_string(instance.size()));
  }
  return out;
}

}  // namespace luceopt
