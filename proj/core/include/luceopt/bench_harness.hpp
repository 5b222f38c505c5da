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

#ifndef LUCEOPT_BENCH_HARNESS_HPP_
#define LUCEOPT_BENCH_HARNESS_HPP_

// Random instance generation and the optimality-gap experiments.
//
// Every instance draws from its own std::mt19937_64 stream seeded with
// splitmix64(splitmix64(splitmix64(seed) ^ cell) ^ index), so results do not
// depend on the number of worker threads or the evaluation order.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "luceopt/model.hpp"

namespace luceopt {

inline constexpr std::string_view kRngName =
    "mt19937_64/splitmix64(seed,cell,index)";

std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t cell,
                         std::uint64_t index);

struct AssortmentExperimentConfig {
  int n = 5;
  double a0 = 1.0;
  double d = 0.2;
  int count = 50;
  std::uint64_t seed = 7;
  int cell = 0;
};

struct PricingExperimentConfig {
  int n = 5;
  double t = 0.5;
  double a0 = 1.0;
  int count = 50;
  std::uint64_t seed = 7;
  int cell = 0;
};

// Throws Error(kInvalidInput) for n < 1, d outside [0, 1], a0 < 0,
// count < 1, or (pricing) t <= 0.
void Validate(const AssortmentExperimentConfig& cfg);
void Validate(const PricingExperimentConfig& cfg);

// Revenues and attractiveness Uniform(0, 10). For each pair i < j one
// uniform draw decides, with probability d, an edge from the more attractive
// product to the other; equal attractiveness gives no edge.
Instance GenerateAssortmentInstance(const AssortmentExperimentConfig& cfg,
                                    int index);

// Utilities Uniform(0, 10), sorted non-increasing.
PricedInstance GeneratePricingInstance(const PricingExperimentConfig& cfg,
                                       int index);

// Orders used by the capacitated suites. Forest: product i > 0 gets a
// uniformly random parent among 0..i-1, or none with probability 1/4; the
// order is the ancestor relation. Threshold: dominance by the rule
// a_x > (1 + t) a_y. Both draw revenues and attractiveness Uniform(0, 10).
Instance GenerateForestInstance(int n, double a0, std::uint64_t seed,
                                int index);
Instance GenerateThresholdInstance(int n, double a0, double t,
                                   std::uint64_t seed, int index);

struct StrategyStats {
  std::string name;
  double avg_gap = 0.0;    // percent below the reference optimum
  double worst_gap = 0.0;
  double min_gap = 0.0;
  double avg_card = 0.0;
};

enum class ExperimentKind { kAssortment, kPricing };

struct GapRow {
  std::string cell;
  int instances = 0;
  std::vector<StrategyStats> baselines;  // RO, or Fixed and Quasi
  StrategyStats reference;               // the exact solver, gap 0
  // Pricing only: instances where the exact solver offers fewer products
  // than the fixed price.
  int card_violations = 0;
};

// Gap rows over explicit instance lists.
GapRow SummarizeAssortment(std::string cell,
                           std::span<const Instance> instances);
GapRow SummarizePricing(std::string cell,
                        std::span<const PricedInstance> instances);

GapRow RunAssortmentBenchmark(const AssortmentExperimentConfig& cfg);
GapRow RunPricingBenchmark(const PricingExperimentConfig& cfg);

// {"experiment":"assortment","cells":[{"n":5,"a0":1,"d":0.2}],"count":250,
//  "seed":7}; pricing cells carry n, t and a0.
struct BenchConfig {
  ExperimentKind kind = ExperimentKind::kAssortment;
  std::vector<AssortmentExperimentConfig> assortment_cells;
  std::vector<PricingExperimentConfig> pricing_cells;
};

// Throws Error(kInvalidInput) on schema violations.
BenchConfig ParseBenchConfig(std::string_view json_text);
BenchConfig LoadBenchConfig(const std::string& path);
std::vector<GapRow> RunBench(const BenchConfig& config);

enum class ReportFormat { kCsv, kMarkdown };

std::string FormatReport(std::span<const GapRow> rows, ExperimentKind kind,
                         ReportFormat format);
// Throws Error(kIo) when the file cannot be written.
void EmitReport(std::span<const GapRow> rows, ExperimentKind kind,
                ReportFormat format, const std::string& path);

// LUCEOPT_THREADS when set to a positive integer, else the hardware
// concurrency.
int WorkerCount();

}  // namespace luceopt

#endif  // LUCEOPT_BENCH_HARNESS_HPP_
