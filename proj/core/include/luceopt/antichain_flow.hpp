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

#ifndef LUCEOPT_ANTICHAIN_FLOW_HPP_
#define LUCEOPT_ANTICHAIN_FLOW_HPP_

// Maximum-weight antichain of a partial order through the weighted Dilworth
// dual: the minimum flow, under lower bounds equal to the positive weights,
// through a chain network of the order.

#include <limits>
#include <span>
#include <vector>

#include "luceopt/model.hpp"

namespace luceopt {

inline constexpr double kInfiniteCapacity =
    std::numeric_limits<double>::infinity();

struct FlowArc {
  int from = 0;
  int to = 0;
  double lower = 0.0;
  double capacity = kInfiniteCapacity;
  double flow = 0.0;
};

struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowArc> arcs;

  int AddNode() { return node_count++; }
  int AddArc(int from, int to, double lower, double capacity);
  // Net flow leaving the source.
  double Value() const;
};

// Returns the network with a feasible flow of minimum value. A feasible flow
// is found through an auxiliary max-flow with a super source and sink, then
// flow is pushed back from sink to source along residual paths.
// Throws Error(kInfeasibleNetwork) when no flow meets the lower bounds.
FlowNetwork MinFlowWithLowerBounds(FlowNetwork network);

// Nodes that can still reach the source in the residual graph of a minimum
// flow. The arcs leaving this set carry exactly their lower bound.
std::vector<bool> MinCutSourceSide(const FlowNetwork& solved);

struct AntichainResult {
  Subset antichain;
  double value = 0.0;       // sum of weights over antichain
  double flow_value = 0.0;  // min-flow certificate; 0 for brute force
};

// Chain network over the closure for the elements of positive weight.
// element_arc[v] receives the index of v's split arc, or -1.
FlowNetwork BuildAntichainNetwork(const DominanceRelation& relation,
                                  std::span<const double> weights,
                                  std::vector<int>* element_arc);

// Elements with non-positive weight never appear in the result.
AntichainResult MaxWeightAntichain(const DominanceRelation& relation,
                                   std::span<const double> weights);

// Exhaustive reference for relation.size() <= 25; ties resolve to the
// lexicographically smallest antichain. Throws Error(kTooLarge).
AntichainResult BruteForceAntichain(const DominanceRelation& relation,
                                    std::span<const double> weights);

}  // namespace luceopt

#endif  // LUCEOPT_ANTICHAIN_FLOW_HPP_
