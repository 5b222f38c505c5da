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

#include "luceopt/antichain_flow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>

#include "luceopt/error.hpp"

namespace luceopt {
namespace {

// Absolute tolerance on residual capacities, scaled by the largest finite
// bound in the network.
constexpr double kFlowEps = 1e-12;

// Dinic on real capacities. Each edge is paired with its reverse at index^1.
class Dinic {
 public:
  explicit Dinic(int nodes, double eps) : graph_(nodes), eps_(eps) {}

  int AddEdge(int from, int to, double capacity) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity});
    graph_[from].push_back(id);
    edges_.push_back({from, 0.0});
    graph_[to].push_back(id + 1);
    return id;
  }

  double residual(int edge) const { return edges_[edge].residual; }
  void set_residual(int edge, double value) { edges_[edge].residual = value; }

  double MaxFlow(int s, int t) {
    double total = 0.0;
    while (Levels(s, t)) {
      next_.assign(graph_.size(), 0);
      for (;;) {
        const double pushed = Push(s, t, kInfiniteCapacity);
        if (pushed <= eps_) break;
        if (std::isinf(pushed)) {
          throw Error(ErrorCode::kInfeasibleNetwork,
                      "unbounded augmenting path");
        }
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    double residual;
  };

  bool Levels(int s, int t) {
    level_.assign(graph_.size(), -1);
    std::queue<int> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int id : graph_[u]) {
        const Edge& e = edges_[id];
        if (e.residual > eps_ && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          queue.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  double Push(int u, int t, double limit) {
    if (u == t) return limit;
    for (std::size_t& i = next_[u]; i < graph_[u].size(); ++i) {
      const int id = graph_[u][i];
      Edge& e = edges_[id];
      if (e.residual <= eps_ || level_[e.to] != level_[u] + 1) continue;
      const double pushed = Push(e.to, t, std::min(limit, e.residual));
      if (pushed > eps_) {
        e.residual -= pushed;
        edges_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  double eps_;
};

double Tolerance(const FlowNetwork& network) {
  double scale = 1.0;
  for (const FlowArc& a : network.arcs) {
    scale = std::max(scale, a.lower);
    if (std::isfinite(a.capacity)) scale = std::max(scale, a.capacity);
  }
  return kFlowEps * scale;
}

}  // namespace

int FlowNetwork::AddArc(int from, int to, double lower, double capacity) {
  arcs.push_back({from, to, lower, capacity, 0.0});
  return static_cast<int>(arcs.size()) - 1;
}

double FlowNetwork::Value() const {
  double value = 0.0;
  for (const FlowArc& a : arcs) {
    if (a.from == source) value += a.flow;
    if (a.to == source) value -= a.flow;
  }
  return value;
}

FlowNetwork MinFlowWithLowerBounds(FlowNetwork network) {
  const int n = network.node_count;
  const double eps = Tolerance(network);
  for (const FlowArc& a : network.arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw Error(ErrorCode::kInvalidInput, "arc endpoint out of range");
    }
    if (!(a.lower >= 0.0) || !(a.capacity >= a.lower)) {
      throw Error(ErrorCode::kInfeasibleNetwork,
                  "arc bounds must satisfy 0 <= lower <= capacity");
    }
  }

  // Shift every arc by its lower bound and route the imbalance through a
  // super source/sink, with an uncapacitated return arc sink -> source.
  const int super_source = n;
  const int super_sink = n + 1;
  Dinic dinic(n + 2, eps);
  std::vector<double> excess(n, 0.0);
  std::vector<int> edge_of_arc;
  edge_of_arc.reserve(network.arcs.size());
  for (const FlowArc& a : network.arcs) {
    edge_of_arc.push_back(dinic.AddEdge(a.from, a.to, a.capacity - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  const int back_edge =
      dinic.AddEdge(network.sink, network.source, kInfiniteCapacity);
  double required = 0.0;
  std::vector<int> balance_edges;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0.0) {
      balance_edges.push_back(dinic.AddEdge(super_source, v, excess[v]));
      required += excess[v];
    } else if (excess[v] < 0.0) {
      balance_edges.push_back(dinic.AddEdge(v, super_sink, -excess[v]));
    }
  }
  const double routed = dinic.MaxFlow(super_source, super_sink);
  if (routed < required - eps * std::max<double>(1.0, network.arcs.size())) {
    throw Error(ErrorCode::kInfeasibleNetwork,
                "no flow satisfies the lower bounds");
  }

  // Drop the return arc and balance arcs, then cancel as much flow as
  // possible by pushing from sink back to source.
  for (int id : {back_edge, back_edge ^ 1}) dinic.set_residual(id, 0.0);
  for (int id : balance_edges) {
    dinic.set_residual(id, 0.0);
    dinic.set_residual(id ^ 1, 0.0);
  }
  dinic.MaxFlow(network.sink, network.source);

  for (std::size_t i = 0; i < network.arcs.size(); ++i) {
    FlowArc& a = network.arcs[i];
    a.flow = a.lower + dinic.residual(edge_of_arc[i] ^ 1);
  }
  return network;
}

std::vector<bool> MinCutSourceSide(const FlowNetwork& solved) {
  const double eps = Tolerance(solved);
  const int n = solved.node_count;
  std::vector<std::vector<int>> out(n), in(n);
  for (std::size_t i = 0; i < solved.arcs.size(); ++i) {
    out[solved.arcs[i].from].push_back(static_cast<int>(i));
    in[solved.arcs[i].to].push_back(static_cast<int>(i));
  }
  // Walk the residual graph backwards from the source: x joins if it has a
  // residual arc into a member.
  std::vector<bool> side(n, false);
  std::vector<int> stack{solved.source};
  side[solved.source] = true;
  while (!stack.empty()) {
    const int y = stack.back();
    stack.pop_back();
    for (int id : in[y]) {
      const FlowArc& a = solved.arcs[id];
      if (!side[a.from] && a.flow < a.capacity - eps) {
        side[a.from] = true;
        stack.push_back(a.from);
      }
    }
    for (int id : out[y]) {
      const FlowArc& a = solved.arcs[id];
      if (!side[a.to] && a.flow > a.lower + eps) {
        side[a.to] = true;
        stack.push_back(a.to);
      }
    }
  }
  return side;
}

FlowNetwork BuildAntichainNetwork(const DominanceRelation& relation,
                                  std::span<const double> weights,
                                  std::vector<int>* element_arc) {
  const int n = relation.size();
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::kInvalidInput,
                "weight count does not match relation size");
  }
  FlowNetwork net;
  net.source = net.AddNode();
  net.sink = net.AddNode();
  std::vector<int> in_node(n, -1), out_node(n, -1), split(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!(weights[v] > 0.0)) continue;
    in_node[v] = net.AddNode();
    out_node[v] = net.AddNode();
    split[v] = net.AddArc(in_node[v], out_node[v], weights[v],
                          kInfiniteCapacity);
    net.AddArc(net.source, in_node[v], 0.0, kInfiniteCapacity);
    net.AddArc(out_node[v], net.sink, 0.0, kInfiniteCapacity);
  }
  for (const Edge& e : relation.closure_edges()) {
    if (split[e.from] >= 0 && split[e.to] >= 0) {
      net.AddArc(out_node[e.from], in_node[e.to], 0.0, kInfiniteCapacity);
    }
  }
  if (element_arc) *element_arc = std::move(split);
  return net;
}

AntichainResult MaxWeightAntichain(const DominanceRelation& relation,
                                   std::span<const double> weights) {
  std::vector<int> split;
  FlowNetwork net = BuildAntichainNetwork(relation, weights, &split);
  AntichainResult result;
  if (net.arcs.empty()) return result;
  net = MinFlowWithLowerBounds(std::move(net));
  result.flow_value = net.Value();
  const std::vector<bool> side = MinCutSourceSide(net);
  for (int v = 0; v < relation.size(); ++v) {
    if (split[v] < 0) continue;
    const FlowArc& a = net.arcs[split[v]];
    if (side[a.from] && !side[a.to]) {
      result.antichain.push_back(v);
      result.value += weights[v];
    }
  }
  return result;
}

AntichainResult BruteForceAntichain(const DominanceRelation& relation,
                                    std::span<const double> weights) {
  const int n = relation.size();
  if (n > 25) {
    throw Error(ErrorCode::kTooLarge,
                "brute-force antichain limited to 25 elements, got " +
                    std::to_string(n));
  }
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::kInvalidInput,
                "weight count does not match relation size");
  }
  std::vector<std::uint32_t> comparable(n, 0);
  for (const Edge& e : relation.closure_edges()) {
    comparable[e.from] |= 1u << e.to;
    comparable[e.to] |= 1u << e.from;
  }
  AntichainResult best;
  Subset current;
  auto visit = [&](auto& self, int i, std::uint32_t blocked) -> void {
    if (i == n) {
      double value = 0.0;
      for (int v : current) value += weights[v];
      if (value > best.value ||
          (value == best.value &&
           std::lexicographical_compare(current.begin(), current.end(),
                                        best.antichain.begin(),
                                        best.antichain.end()))) {
        best.value = value;
        best.antichain = current;
      }
      return;
    }
    if (!(blocked >> i & 1u)) {
      current.push_back(i);
      self(self, i + 1, blocked | comparable[i]);
      current.pop_back();
    }
    self(self, i + 1, blocked);
  };
  visit(visit, 0, 0u);
  return best;
}

}  // namespace luceopt
