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

#include "luceopt/bench_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "luceopt/assortment.hpp"
#include "luceopt/error.hpp"
#include "luceopt/pricing.hpp"

namespace luceopt {
namespace {

using nlohmann::json;

// Uniform on the open interval (0, 1).
double OpenUnit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double HalfOpenUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void ParallelFor(int count, const std::function<void(int)>& body) {
  const int workers = std::max(1, std::min(WorkerCount(), count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct Sample {
  std::vector<double> gaps;  // one per baseline
  std::vector<int> cards;    // baselines, then the reference
};

double Gap(double baseline, double optimum) {
  return optimum > 0.0 ? 100.0 * (1.0 - baseline / optimum) : 0.0;
}

GapRow Aggregate(std::string cell, const std::vector<std::string>& names,
                 std::string reference, const std::vector<Sample>& samples) {
  GapRow row;
  row.cell = std::move(cell);
  row.instances = static_cast<int>(samples.size());
  const std::size_t b = names.size();
  row.baselines.resize(b);
  for (std::size_t j = 0; j < b; ++j) row.baselines[j].name = names[j];
  row.reference.name = std::move(reference);
  if (samples.empty()) return row;
  for (std::size_t j = 0; j < b; ++j) {
    row.baselines[j].worst_gap = samples[0].gaps[j];
    row.baselines[j].min_gap = samples[0].gaps[j];
  }
  for (const Sample& s : samples) {
    for (std::size_t j = 0; j < b; ++j) {
      StrategyStats& st = row.baselines[j];
      st.avg_gap += s.gaps[j];
      st.worst_gap = std::max(st.worst_gap, s.gaps[j]);
      st.min_gap = std::min(st.min_gap, s.gaps[j]);
      st.avg_card += s.cards[j];
    }
    row.reference.avg_card += s.cards[b];
  }
  const double m = static_cast<double>(samples.size());
  for (StrategyStats& st : row.baselines) {
    st.avg_gap /= m;
    st.avg_card /= m;
  }
  row.reference.avg_card /= m;
  return row;
}

std::string Label(const AssortmentExperimentConfig& c) {
  std::ostringstream out;
  out << "n=" << c.n << " a0=" << c.a0 << " d=" << c.d;
  return out.str();
}

std::string Label(const PricingExperimentConfig& c) {
  std::ostringstream out;
  out << "n=" << c.n << " t=" << c.t << " a0=" << c.a0;
  return out.str();
}

void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t cell,
                         std::uint64_t index) {
  return SplitMix64(SplitMix64(SplitMix64(seed) ^ cell) ^ index);
}

void Validate(const AssortmentExperimentConfig& cfg) {
  if (cfg.n < 1) Invalid("n must be >= 1");
  if (!(cfg.d >= 0.0 && cfg.d <= 1.0)) Invalid("d must lie in [0, 1]");
  if (!(cfg.a0 >= 0.0)) Invalid("a0 must be >= 0");
  if (cfg.count < 1) Invalid("count must be >= 1");
}

void Validate(const PricingExperimentConfig& cfg) {
  if (cfg.n < 1) Invalid("n must be >= 1");
  if (!(cfg.t > 0.0)) Invalid("t must be > 0");
  if (!(cfg.a0 >= 0.0)) Invalid("a0 must be >= 0");
  if (cfg.count < 1) Invalid("count must be >= 1");
}

Instance GenerateAssortmentInstance(const AssortmentExperimentConfig& cfg,
                                    int index) {
  Validate(cfg);
  std::mt19937_64 rng(StreamSeed(cfg.seed, cfg.cell, index));
  std::vector<Product> products(cfg.n);
  for (Product& p : products) p.revenue = 10.0 * OpenUnit(rng);
  for (Product& p : products) p.attractiveness = 10.0 * OpenUnit(rng);
  std::vector<Edge> edges;
  for (int i = 0; i < cfg.n; ++i) {
    for (int j = i + 1; j < cfg.n; ++j) {
      const double q = HalfOpenUnit(rng);
      const double ai = products[i].attractiveness;
      const double aj = products[j].attractiveness;
      if (ai == aj || !(q < cfg.d)) continue;
      edges.push_back(ai > aj ? Edge{i, j} : Edge{j, i});
    }
  }
  return Instance(std::move(products), cfg.a0,
                  ValidatePartialOrder(edges, cfg.n));
}

PricedInstance GeneratePricingInstance(const PricingExperimentConfig& cfg,
                                       int index) {
  Validate(cfg);
  std::mt19937_64 rng(StreamSeed(cfg.seed, cfg.cell, index));
  std::vector<double> u(cfg.n);
  for (double& x : u) x = 10.0 * OpenUnit(rng);
  std::sort(u.begin(), u.end(), std::greater<>());
  return PricedInstance(std::move(u), cfg.t, cfg.a0);
}

Instance GenerateForestInstance(int n, double a0, std::uint64_t seed,
                                int index) {
  if (n < 1) Invalid("n must be >= 1");
  constexpr std::uint64_t kForestStream = 0xF0'0000'0000ull;
  std::mt19937_64 rng(StreamSeed(seed, kForestStream, index));
  std::vector<Product> products(n);
  for (Product& p : products) {
    p.revenue = 10.0 * OpenUnit(rng);
    p.attractiveness = 10.0 * OpenUnit(rng);
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const double q = HalfOpenUnit(rng);
    if (q < 0.25) continue;
    const int parent =
        std::min(i - 1, static_cast<int>((q - 0.25) / 0.75 * i));
    edges.push_back({parent, i});
  }
  return Instance(std::move(products), a0, ValidatePartialOrder(edges, n));
}

Instance GenerateThresholdInstance(int n, double a0, double t,
                                   std::uint64_t seed, int index) {
  if (n < 1) Invalid("n must be >= 1");
  constexpr std::uint64_t kThresholdStream = 0xF1'0000'0000ull;
  std::mt19937_64 rng(StreamSeed(seed, kThresholdStream, index));
  std::vector<Product> products(n);
  std::vector<double> att(n);
  for (int i = 0; i < n; ++i) {
    products[i].revenue = 10.0 * OpenUnit(rng);
    att[i] = products[i].attractiveness = 10.0 * OpenUnit(rng);
  }
  return Instance(std::move(products), a0, ThresholdDominance(att, t));
}

GapRow SummarizeAssortment(std::string cell,
                           std::span<const Instance> instances) {
  std::vector<Sample> samples(instances.size());
  ParallelFor(static_cast<int>(instances.size()), [&](int i) {
    const AssortmentSolution opt = SolveAssortment2slm(instances[i]);
    const AssortmentSolution ro = RevenueOrderedHeuristic(instances[i]);
    samples[i].gaps = {Gap(ro.revenue, opt.revenue)};
    samples[i].cards = {static_cast<int>(ro.assortment.size()),
                        static_cast<int>(opt.assortment.size())};
  });
  return Aggregate(std::move(cell), {"RO"}, "2SLM-OPT", samples);
}

GapRow SummarizePricing(std::string cell,
                        std::span<const PricedInstance> instances) {
  std::vector<Sample> samples(instances.size());
  ParallelFor(static_cast<int>(instances.size()), [&](int i) {
    const PricedInstance& inst = instances[i];
    const PricingSolution opt = SolveJaptlm(inst);
    const PricingSolution fixed = FixedPricePolicy(inst, inst.size());
    const PricingSolution quasi = QuasiSamePricePolicy(inst);
    samples[i].gaps = {Gap(fixed.revenue, opt.revenue),
                       Gap(quasi.revenue, opt.revenue)};
    samples[i].cards = {fixed.k, quasi.k, opt.k};
  });
  GapRow row = Aggregate(std::move(cell), {"Fixed", "Quasi"}, "TLM-Opt",
                         samples);
  for (const Sample& s : samples) {
    if (s.cards[2] < s.cards[0]) ++row.card_violations;
  }
  return row;
}

GapRow RunAssortmentBenchmark(const AssortmentExperimentConfig& cfg) {
  Validate(cfg);
  std::vector<Instance> instances;
  instances.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) {
    instances.push_back(GenerateAssortmentInstance(cfg, i));
  }
  return SummarizeAssortment(Label(cfg), instances);
}

GapRow RunPricingBenchmark(const PricingExperimentConfig& cfg) {
  Validate(cfg);
  std::vector<PricedInstance> instances;
  instances.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) {
    instances.push_back(GeneratePricingInstance(cfg, i));
  }
  return SummarizePricing(Label(cfg), instances);
}

BenchConfig ParseBenchConfig(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    Invalid(std::string("bench config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) Invalid("bench config must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "experiment" && key != "cells" && key != "count" &&
        key != "seed") {
      Invalid("unknown bench config field '" + key + "'");
    }
  }
  BenchConfig cfg;
  try {
    const std::string kind = doc.at("experiment").get<std::string>();
    if (kind == "assortment") {
      cfg.kind = ExperimentKind::kAssortment;
    } else if (kind == "pricing") {
      cfg.kind = ExperimentKind::kPricing;
    } else {
      Invalid("experiment must be 'assortment' or 'pricing'");
    }
    const int count = doc.at("count").get<int>();
    const std::uint64_t seed = doc.value("seed", std::uint64_t{7});
    const json& cells = doc.at("cells");
    if (!cells.is_array()) Invalid("cells must be an array");
    int index = 0;
    for (const json& c : cells) {
      if (cfg.kind == ExperimentKind::kAssortment) {
        for (const auto& [key, value] : c.items()) {
          if (key != "n" && key != "a0" && key != "d") {
            Invalid("unknown assortment cell field '" + key + "'");
          }
        }
        AssortmentExperimentConfig a;
        a.n = c.at("n").get<int>();
        a.a0 = c.at("a0").get<double>();
        a.d = c.at("d").get<double>();
        a.count = count;
        a.seed = seed;
        a.cell = index++;
        Validate(a);
        cfg.assortment_cells.push_back(a);
      } else {
        for (const auto& [key, value] : c.items()) {
          if (key != "n" && key != "a0" && key != "t") {
            Invalid("unknown pricing cell field '" + key + "'");
          }
        }
        PricingExperimentConfig p;
        p.n = c.at("n").get<int>();
        p.t = c.at("t").get<double>();
        p.a0 = c.at("a0").get<double>();
        p.count = count;
        p.seed = seed;
        p.cell = index++;
        Validate(p);
        cfg.pricing_cells.push_back(p);
      }
    }
  } catch (const json::exception& e) {
    Invalid(std::string("bench config: ") + e.what());
  }
  return cfg;
}

BenchConfig LoadBenchConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseBenchConfig(buf.str());
}

std::vector<GapRow> RunBench(const BenchConfig& config) {
  std::vector<GapRow> rows;
  for (const auto& c : config.assortment_cells) {
    rows.push_back(RunAssortmentBenchmark(c));
  }
  for (const auto& c : config.pricing_cells) {
    rows.push_back(RunPricingBenchmark(c));
  }
  return rows;
}

std::string FormatReport(std::span<const GapRow> rows, ExperimentKind kind,
                         ReportFormat format) {
  std::vector<std::string> header = {"cell", "instances"};
  if (kind == ExperimentKind::kAssortment) {
    header.insert(header.end(), {"ro_avg_gap", "ro_worst_gap", "ro_avg_card",
                                 "opt_avg_card"});
  } else {
    header.insert(header.end(),
                  {"fixed_avg_gap", "fixed_worst_gap", "quasi_avg_gap",
                   "quasi_worst_gap", "fixed_avg_card", "quasi_avg_card",
                   "tlm_avg_card"});
  }
  const bool csv = format == ReportFormat::kCsv;
  if (csv) header.push_back("rng");
  auto number = [csv](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, csv ? "%.6f" : "%.3f", x);
    return std::string(buf);
  };
  std::vector<std::vector<std::string>> table;
  for (const GapRow& r : rows) {
    std::vector<std::string> line = {r.cell, std::to_string(r.instances)};
    for (const StrategyStats& s : r.baselines) {
      line.push_back(number(s.avg_gap));
      line.push_back(number(s.worst_gap));
    }
    for (const StrategyStats& s : r.baselines) {
      line.push_back(number(s.avg_card));
    }
    line.push_back(number(r.reference.avg_card));
    if (csv) line.emplace_back(kRngName);
    table.push_back(std::move(line));
  }
  std::ostringstream out;
  auto join = [&out](const std::vector<std::string>& cells,
                     const char* sep, const char* pre, const char* post) {
    out << pre;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << sep;
      out << cells[i];
    }
    out << post << '\n';
  };
  if (csv) {
    join(header, ",", "", "");
    for (const auto& line : table) join(line, ",", "", "");
  } else {
    out << "RNG: " << kRngName << "\n\n";
    join(header, " | ", "| ", " |");
    join(std::vector<std::string>(header.size(), "---"), " | ", "| ", " |");
    for (const auto& line : table) join(line, " | ", "| ", " |");
  }
  return out.str();
}

void EmitReport(std::span<const GapRow> rows, ExperimentKind kind,
                ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << FormatReport(rows, kind, format);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

int WorkerCount() {
  if (const char* env = std::getenv("LUCEOPT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace luceopt
