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

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "cli.hpp"
#include "luceopt/assortment.hpp"
#include "luceopt/bench_harness.hpp"
#include "luceopt/capacitated.hpp"
#include "luceopt/oracles.hpp"
#include "luceopt/pricing.hpp"

namespace luceopt::cli {
namespace {

constexpr double kAssortmentTol = 1e-6;
constexpr double kPricingTol = 1e-3;

bool Close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(1.0, std::fabs(b));
}

bool CheckAssortmentCase(int i, std::uint64_t seed, int max_n,
                         std::ostream& diffs) {
  static constexpr double kDensity[] = {0.0, 0.2, 0.5, 0.8, 1.0};
  static constexpr double kA0[] = {1.0, 8.0, 0.0};
  AssortmentExperimentConfig cfg;
  cfg.n = 1 + i % max_n;
  cfg.d = kDensity[i % 5];
  cfg.a0 = kA0[i % 3];
  cfg.count = 1;
  cfg.seed = seed;
  const Instance inst = GenerateAssortmentInstance(cfg, i);
  const AssortmentSolution sol = SolveAssortment2slm(inst);
  const OracleResult ref = BruteForceAssortment(inst);
  if (Close(sol.revenue, ref.value, kAssortmentTol)) return true;
  diffs << "case " << i << " n=" << cfg.n << " d=" << cfg.d
        << ": solver=" << sol.revenue << " oracle=" << ref.value << '\n';
  return false;
}

bool CheckCapacitatedCase(int i, std::uint64_t seed, int max_n,
                          std::ostream& diffs) {
  static constexpr double kT[] = {0.1, 0.4, 1.0};
  const int n = 1 + (i / 2) % max_n;
  const int capacity = std::min(n, 1 + (i / 2) % 4);
  const bool tree = i % 2 == 0;
  const Instance inst =
      tree ? GenerateForestInstance(n, 1.0 + i % 3, seed, i)
           : GenerateThresholdInstance(n, 1.0 + i % 3, kT[i % 3], seed, i);
  const AssortmentSolution sol = tree
                                     ? SolveCapacitatedTree(inst, capacity)
                                     : SolveCapacitatedAttCorr(inst, capacity);
  const OracleResult ref = BruteForceAssortment(inst, capacity);
  if (Close(sol.revenue, ref.value, kAssortmentTol) &&
      static_cast<int>(sol.assortment.size()) <= capacity &&
      IsAntichain(sol.assortment, inst.dominance())) {
    return true;
  }
  diffs << "case " << i << (tree ? " tree" : " threshold") << " n=" << n
        << " C=" << capacity << ": solver=" << sol.revenue
        << " oracle=" << ref.value << '\n';
  return false;
}

bool CheckPricingCase(int i, std::uint64_t seed, int max_n,
                      std::ostream& diffs) {
  static constexpr double kT[] = {0.1, 0.5, 1.0};
  static constexpr double kA0[] = {1.0, 8.0};
  PricingExperimentConfig cfg;
  cfg.n = 1 + i % max_n;
  cfg.t = kT[i % 3];
  cfg.a0 = kA0[(i / 3) % 2];
  cfg.count = 1;
  cfg.seed = seed;
  const PricedInstance inst = GeneratePricingInstance(cfg, i);
  const double overall = SolveJaptlm(inst).revenue;
  bool ok = true;
  for (int k = 1; k <= inst.size(); ++k) {
    const OracleResult ref = NumericPricingOracle(inst, k);
    try {
      const PricingSolution sol = SolveJaptlmK(inst, k);
      if (!Close(sol.revenue, ref.value, kPricingTol)) {
        diffs << "case " << i << " k=" << k << ": solver=" << sol.revenue
              << " oracle=" << ref.value << '\n';
        ok = false;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoFeasibleCandidate) throw;
      // The restricted optimum for [k] is then beaten by a smaller prefix.
      if (ref.value > overall * (1.0 + kPricingTol)) {
        diffs << "case " << i << " k=" << k
              << ": no candidate, but oracle=" << ref.value
              << " exceeds best=" << overall << '\n';
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

VerifyOutcome RunVerify(std::string_view suite, int count, std::uint64_t seed,
                        int max_n, std::ostream& diffs) {
  if (count < 1) throw Error(ErrorCode::kInvalidInput, "--count must be >= 1");
  if (max_n < 1) throw Error(ErrorCode::kInvalidInput, "--max-n must be >= 1");
  bool (*check)(int, std::uint64_t, int, std::ostream&) = nullptr;
  int limit = 0;
  if (suite == "assortment") {
    check = CheckAssortmentCase;
    limit = kOracleAssortmentLimit;
  } else if (suite == "capacitated") {
    check = CheckCapacitatedCase;
    limit = kOracleAssortmentLimit;
  } else if (suite == "pricing") {
    check = CheckPricingCase;
    limit = kOraclePricingLimit;
  } else {
    throw Error(ErrorCode::kInvalidInput,
                "unknown suite '" + std::string(suite) + "'");
  }
  if (max_n > limit) {
    throw Error(ErrorCode::kInvalidInput,
                "the " + std::string(suite) + " oracle supports --max-n <= " +
                    std::to_string(limit));
  }
  VerifyOutcome outcome;
  for (int i = 0; i < count; ++i) {
    ++outcome.cases;
    if (!check(i, seed, max_n, diffs)) ++outcome.failures;
  }
  return outcome;
}

}  // namespace luceopt::cli
