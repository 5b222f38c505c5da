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

#include "cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "luceopt/bench_harness.hpp"
#include "luceopt/capacitated.hpp"
#include "luceopt/instance_io.hpp"
#include "luceopt/pricing.hpp"

namespace luceopt::cli {
namespace {

using nlohmann::json;

struct SolveArgs {
  std::string instance;
  std::optional<int> capacity;
  std::string method = "auto";
  double eps = kDefaultEps;
};

struct PriceArgs {
  std::string instance;
  std::string policy = "tlm-opt";
};

struct VerifyArgs {
  std::string suite;
  int count = 100;
  std::uint64_t seed = 7;
  int max_n = 10;
};

struct GenArgs {
  std::string kind = "assortment";
  int n = 5;
  double a0 = 1.0;
  double density = 0.2;
  double t = 0.5;
  std::uint64_t seed = 7;
  int count = 1;
  std::string out_dir = ".";
};

struct BenchArgs {
  std::string config;
  std::string out;
  std::string format;
};

json Ids(const Subset& s) {
  json ids = json::array();
  for (int i : s) ids.push_back(i + 1);
  return ids;
}

int CmdSolve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = ToInstance(LoadInstanceFile(a.instance));
  AssortmentSolution sol;
  std::string method = a.method;
  if (a.method == "auto") {
    const CapacitatedResult r = SolveCapacitatedAuto(inst, a.capacity, a.eps);
    sol = r.solution;
    method = std::string(CapacitatedMethodName(r.method));
  } else if (a.method == "unconstrained") {
    if (a.capacity) {
      throw Error(ErrorCode::kInvalidInput,
                  "--method unconstrained takes no --capacity");
    }
    sol = SolveAssortment2slm(inst, a.eps);
  } else {
    const int cap = a.capacity.value_or(std::max(1, inst.size()));
    if (a.method == "bruteforce") {
      sol = SolveCapacitatedBruteforce(inst, cap);
    } else if (a.method == "tree") {
      sol = SolveCapacitatedTree(inst, cap, a.eps);
    } else {
      sol = SolveCapacitatedAttCorr(inst, cap, a.eps);
    }
  }
  out << json{{"assortment", Ids(sol.assortment)},
              {"revenue", sol.revenue},
              {"method", method}}
             .dump()
      << '\n';
  return kExitOk;
}

int CmdPrice(const PriceArgs& a, std::ostream& out) {
  std::vector<int> order;
  const PricedInstance inst =
      ToPricedInstance(LoadInstanceFile(a.instance), &order);
  PricingSolution sol;
  if (a.policy == "fixed") {
    sol = FixedPricePolicy(inst, inst.size());
  } else if (a.policy == "quasi") {
    sol = QuasiSamePricePolicy(inst);
  } else {
    sol = SolveJaptlm(inst);
  }
  json ids = json::array();
  for (int i = 0; i < sol.k; ++i) ids.push_back(order[i] + 1);
  out << json{{"k", sol.k},
              {"assortment", ids},
              {"prices", sol.prices},
              {"revenue", sol.revenue},
              {"k1", sol.k1},
              {"k2", sol.k2},
              {"mode", std::string(PricingModeName(sol.mode))}}
             .dump()
      << '\n';
  return kExitOk;
}

int CmdVerify(const VerifyArgs& a, std::ostream& out) {
  const VerifyOutcome r = RunVerify(a.suite, a.count, a.seed, a.max_n, out);
  out << json{{"suite", a.suite}, {"cases", r.cases}, {"failures", r.failures}}
             .dump()
      << '\n';
  return r.failures == 0 ? kExitOk : kExitInfeasible;
}

int CmdGen(const GenArgs& a, std::ostream& out) {
  std::filesystem::create_directories(a.out_dir);
  for (int i = 0; i < a.count; ++i) {
    InstanceFile file;
    if (a.kind == "pricing") {
      PricingExperimentConfig cfg;
      cfg.n = a.n;
      cfg.t = a.t;
      cfg.a0 = a.a0;
      cfg.seed = a.seed;
      file = FromPricedInstance(GeneratePricingInstance(cfg, i));
    } else {
      AssortmentExperimentConfig cfg;
      cfg.n = a.n;
      cfg.a0 = a.a0;
      cfg.d = a.density;
      cfg.seed = a.seed;
      file = FromInstance(GenerateAssortmentInstance(cfg, i));
    }
    const std::filesystem::path path =
        std::filesystem::path(a.out_dir) /
        (a.kind + "_n" + std::to_string(a.n) + "_s" + std::to_string(a.seed) +
         "_" + std::to_string(i) + ".json");
    SaveInstanceFile(file, path);
    out << path.string() << '\n';
  }
  return kExitOk;
}

int CmdBench(const BenchArgs& a, std::ostream& out) {
  const BenchConfig cfg = LoadBenchConfig(a.config);
  ReportFormat format = ReportFormat::kCsv;
  if (a.format == "markdown" ||
      (a.format.empty() && std::filesystem::path(a.out).extension() == ".md")) {
    format = ReportFormat::kMarkdown;
  }
  const std::vector<GapRow> rows = RunBench(cfg);
  if (a.out.empty()) {
    out << FormatReport(rows, cfg.kind, format);
  } else {
    EmitReport(rows, cfg.kind, format, a.out);
    out << a.out << '\n';
  }
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooLarge:
    case ErrorCode::kProblemTooLarge:
    case ErrorCode::kNotATree:
    case ErrorCode::kNotAttractivenessCorrelated:
    case ErrorCode::kNoFeasibleCandidate:
    case ErrorCode::kZeroOutsideOption:
    case ErrorCode::kInfeasibleNetwork:
      return kExitInfeasible;
    default:
      return kExitInput;
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Assortment and pricing solvers for Luce-type choice models",
               "luceopt"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Optimize an assortment");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON file")
      ->required();
  solve_cmd->add_option("--capacity", solve.capacity, "Maximum assortment size")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--method", solve.method, "Solver")
      ->check(CLI::IsMember(
          {"auto", "bruteforce", "tree", "attcorr", "unconstrained"}));
  solve_cmd->add_option("--eps", solve.eps, "Relative optimality tolerance")
      ->check(CLI::PositiveNumber);

  PriceArgs price;
  CLI::App* price_cmd = app.add_subcommand("price", "Optimize prices");
  price_cmd->add_option("--instance", price.instance, "Instance JSON file")
      ->required();
  price_cmd->add_option("--policy", price.policy, "Pricing policy")
      ->check(CLI::IsMember({"tlm-opt", "fixed", "quasi"}));

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Compare solvers with brute-force oracles");
  verify_cmd->add_option("--suite", verify.suite, "Comparison suite")
      ->required()
      ->check(CLI::IsMember({"assortment", "capacitated", "pricing"}));
  verify_cmd->add_option("--count", verify.count, "Number of cases");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest instance size");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write random instance files");
  gen_cmd->add_option("--kind", gen.kind, "Instance family")
      ->check(CLI::IsMember({"assortment", "pricing"}));
  gen_cmd->add_option("--n", gen.n, "Products per instance");
  gen_cmd->add_option("--a0", gen.a0, "Outside-option attractiveness");
  gen_cmd->add_option("--density", gen.density, "Dominance edge probability");
  gen_cmd->add_option("--t", gen.t, "Threshold (pricing)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--count", gen.count, "Number of files");
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a gap experiment");
  bench_cmd->add_option("--config", bench.config, "Experiment JSON")
      ->required();
  bench_cmd->add_option("--out", bench.out, "Report path (stdout if absent)");
  bench_cmd->add_option("--format", bench.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));

  std::vector<const char*> argv = {"luceopt"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return CmdSolve(solve, out);
    if (*price_cmd) return CmdPrice(price, out);
    if (*verify_cmd) return CmdVerify(verify, out);
    if (*gen_cmd) return CmdGen(gen, out);
    return CmdBench(bench, out);
  } catch (const Error& e) {
    err << "luceopt: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "luceopt: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace luceopt::cli
