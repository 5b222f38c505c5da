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

#include "luceopt/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "luceopt/error.hpp"
#include "luceopt/lambert_w.hpp"

namespace luceopt {
namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kTieTol = 1e-10;

void RequireOutsideOption(const PricedInstance& instance) {
  if (!(instance.a0() > 0.0)) {
    throw Error(ErrorCode::kZeroOutsideOption,
                "pricing needs a0 > 0 (the revenue formula divides by a0)");
  }
}

void RequireK(const PricedInstance& instance, int k) {
  if (k < 1 || k > instance.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "k must lie in 1.." + std::to_string(instance.size()));
  }
}

// W(e^log_x), usable when e^log_x overflows.
double LambertWOfExp(double log_x) {
  if (log_x < 700.0) return LambertW(std::exp(log_x));
  // w + ln w = log_x, Newton from log_x - ln(log_x).
  double w = log_x - std::log(log_x);
  for (int i = 0; i < 50; ++i) {
    const double step = (w + std::log(w) - log_x) / (1.0 + 1.0 / w);
    w -= step;
    if (std::fabs(step) <= 1e-15 * w) break;
  }
  return w;
}

Subset Prefix(int k) {
  Subset s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  return s;
}

// Snaps the prices onto a valid pair and evaluates them.
bool Finalize(const PricedInstance& instance, PricingSolution* sol) {
  PriceVector full = sol->FullPrices(instance.size());
  const Subset s = Prefix(sol->k);
  if (!SnapToValid(s, full, instance)) return false;
  sol->prices.assign(full.begin(), full.begin() + sol->k);
  sol->revenue = ExpectedRevenuePriced(s, full, instance);
  return true;
}

// Revenue-maximizing common price p for products with total attractiveness
// A e^{-p}, next to fixed terms: numerator c and denominator d.
double BestSharedPrice(double a, double c, double d) {
  return 1.0 + c / d + LambertW(a * std::exp(-1.0 - c / d) / d);
}

}  // namespace

std::string_view PricingModeName(PricingMode mode) {
  return mode == PricingMode::kBoundaryTight ? "boundary-tight"
                                             : "unconstrained";
}

PriceVector PricingSolution::FullPrices(int n) const {
  PriceVector full(n, kNotOffered);
  std::copy(prices.begin(), prices.end(), full.begin());
  return full;
}

Subset PricingSolution::Assortment() const { return Prefix(k); }

double TwoProductEqualPrice(double u_i, double u_j, double total) {
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kNonPositiveInput, "T must be > 0");
  }
  const double hi = std::max(u_i, u_j);
  return hi + std::log1p(std::exp(std::min(u_i, u_j) - hi)) - std::log(total);
}

PricingSolution FixedPricePolicy(const PricedInstance& instance, int k) {
  RequireOutsideOption(instance);
  RequireK(instance, k);
  const std::vector<double>& u = instance.utilities();
  int j = 1;
  while (j < k && std::exp(u[0] - u[j]) <= 1.0 + instance.t()) ++j;
  double sum = 0.0;
  for (int i = 0; i < j; ++i) sum += std::exp(u[i] - 1.0);
  const double r = LambertW(sum / instance.a0());
  PricingSolution sol;
  sol.k = j;
  sol.prices.assign(j, 1.0 + r);
  sol.revenue = r;
  Finalize(instance, &sol);
  return sol;
}

BoundaryCandidate JaptlmCandidate(const PricedInstance& instance, int k,
                                  int k1, int k2) {
  RequireOutsideOption(instance);
  if (k1 < 1 || k2 < 1 || k1 + k2 > k || k > instance.size()) {
    throw Error(ErrorCode::kBadGroupSizes,
                "need 1 <= k1, 1 <= k2, k1 + k2 <= k <= n; got k=" +
                    std::to_string(k) + " k1=" + std::to_string(k1) +
                    " k2=" + std::to_string(k2));
  }
  const std::vector<double>& u = instance.utilities();
  const double t = instance.t();
  const double log1pt = std::log1p(t);
  double top = 0.0;
  double bottom = 0.0;
  for (int i = 0; i < k1; ++i) top += u[i];
  for (int i = k - k2; i < k; ++i) bottom += u[i];
  BoundaryCandidate cand;
  cand.k1 = k1;
  cand.k2 = k2;
  cand.c1 = ((1.0 + t) * top + bottom + k2 * log1pt) / (k1 * (1.0 + t) + k2) -
            1.0;
  double middle = 0.0;  // E e^{-C1-1}
  for (int i = k1; i < k - k2; ++i) middle += std::exp(u[i] - cand.c1 - 1.0);
  cand.c2 = k1 + k2 / (1.0 + t) + middle;
  cand.revenue =
      LambertWOfExp(std::log(cand.c2) + cand.c1 - std::log(instance.a0()));
  cand.u_s = cand.c1 - cand.revenue;
  cand.prices.resize(k);
  for (int i = 0; i < k; ++i) {
    if (i < k1) {
      cand.prices[i] = u[i] - cand.u_s;
    } else if (i >= k - k2) {
      cand.prices[i] = u[i] - cand.u_s + log1pt;
    } else {
      cand.prices[i] = 1.0 + cand.revenue;
    }
  }
  const double flat = 1.0 + cand.revenue;
  bool ok = true;
  for (int i = 0; i < k && ok; ++i) {
    const double p = cand.prices[i];
    ok = std::isfinite(p) && p >= 0.0;
    if (i < k1) ok = ok && p >= flat - kFeasTol;
    if (i >= k - k2) ok = ok && p <= flat + kFeasTol;
    if (i > 0) {
      ok = ok && cand.prices[i - 1] >= p - kFeasTol &&
           u[i - 1] - cand.prices[i - 1] >= u[i] - p - kFeasTol;
    }
  }
  if (ok) {
    PriceVector full(instance.size(), kNotOffered);
    std::copy(cand.prices.begin(), cand.prices.end(), full.begin());
    ok = SnapToValid(Prefix(k), full, instance, kFeasTol);
    if (ok) std::copy(full.begin(), full.begin() + k, cand.prices.begin());
  }
  cand.feasible = ok;
  return cand;
}

PricingSolution SolveJaptlmK(const PricedInstance& instance, int k) {
  RequireOutsideOption(instance);
  RequireK(instance, k);
  const std::vector<double>& u = instance.utilities();
  const double t = instance.t();
  if (std::exp(u[0] - u[k - 1]) <= 1.0 + t) {
    PricingSolution sol = FixedPricePolicy(instance, k);
    sol.mode = PricingMode::kUnconstrained;
    return sol;
  }
  // A candidate is feasible iff theta = C1 + 1 separates the groups:
  // u_{k1} >= theta >= u_{k1+1} and u_{k-k2} >= theta - ln(1+t) >=
  // u_{k-k2+1}. Prefix sums make this an O(1) screen per pair.
  const double log1pt = std::log1p(t);
  std::vector<double> prefix(k + 1, 0.0);
  for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + u[i];
  const double screen = 1e3 * kFeasTol;
  BoundaryCandidate best;
  bool have = false;
  for (int k1 = 1; k1 < k; ++k1) {
    for (int k2 = 1; k1 + k2 <= k; ++k2) {
      const double theta =
          ((1.0 + t) * prefix[k1] + prefix[k] - prefix[k - k2] +
           k2 * log1pt) /
          (k1 * (1.0 + t) + k2);
      const int m = k - k2;  // first bottom-group index
      if (u[k1 - 1] < theta - screen || u[m] > theta - log1pt + screen) {
        continue;
      }
      if (k1 < m &&
          (u[k1] > theta + screen || u[m - 1] < theta - log1pt - screen)) {
        continue;
      }
      BoundaryCandidate cand = JaptlmCandidate(instance, k, k1, k2);
      if (!cand.feasible) continue;
      if (!have || cand.revenue > best.revenue + kTieTol) {
        best = std::move(cand);
        have = true;
      }
    }
  }
  if (!have) {
    throw Error(ErrorCode::kNoFeasibleCandidate,
                "no feasible boundary candidate for k = " + std::to_string(k));
  }
  PricingSolution sol;
  sol.k = k;
  sol.k1 = best.k1;
  sol.k2 = best.k2;
  sol.mode = PricingMode::kBoundaryTight;
  sol.prices = best.prices;
  sol.revenue = ExpectedRevenuePriced(Prefix(k), sol.FullPrices(instance.size()),
                                      instance);
  return sol;
}

PricingSolution SolveJaptlm(const PricedInstance& instance) {
  RequireOutsideOption(instance);
  PricingSolution best;
  bool have = false;
  for (int k = 1; k <= instance.size(); ++k) {
    PricingSolution sol;
    try {
      sol = SolveJaptlmK(instance, k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoFeasibleCandidate) throw;
      continue;
    }
    if (!have || sol.revenue > best.revenue + kTieTol) {
      best = std::move(sol);
      have = true;
    }
  }
  return best;
}

PricingSolution QuasiSamePricePolicy(const PricedInstance& instance) {
  RequireOutsideOption(instance);
  const std::vector<double>& u = instance.utilities();
  const double a0 = instance.a0();
  const double log1pt = std::log1p(instance.t());
  PricingSolution best;
  bool have = false;
  auto consider = [&](PricingSolution sol) {
    if (!Finalize(instance, &sol)) return;
    if (!have || sol.revenue > best.revenue + kTieTol) {
      best = std::move(sol);
      have = true;
    }
  };
  for (int k = 1; k <= instance.size(); ++k) {
    if (k == 1) {
      PricingSolution sol;
      sol.k = 1;
      sol.prices = {1.0 + LambertW(std::exp(u[0] - 1.0) / a0)};
      consider(std::move(sol));
      continue;
    }
    if (std::exp(u[0] - u[k - 2]) > 1.0 + instance.t()) break;
    double group = 0.0;
    for (int i = 0; i < k - 1; ++i) group += std::exp(u[i]);
    const double uk = u[k - 1];
    // Shared price p of the group for a given p_k, clamped to the band that
    // keeps product k and the group mutually undominated.
    auto shared = [&](double pk) {
      const double b = std::exp(uk - pk);
      const double c = pk * b;
      const double d = b + a0;
      const double lo = std::max(0.0, pk + u[0] - uk - log1pt);
      const double hi = pk - uk + u[k - 2] + log1pt;
      return std::clamp(BestSharedPrice(group, c, d), lo, std::max(lo, hi));
    };
    auto profile = [&](double pk) {
      const double p = shared(pk);
      const double g = group * std::exp(-p);
      const double b = std::exp(uk - pk);
      return (p * g + pk * b) / (g + b + a0);
    };
    const double upper = std::max(0.0, uk) + 20.0;
    constexpr int kScan = 512;
    const double h = upper / kScan;
    int arg = 0;
    double top = profile(0.0);
    for (int i = 1; i <= kScan; ++i) {
      const double v = profile(i * h);
      if (v > top) {
        top = v;
        arg = i;
      }
    }
    double a = std::max(0.0, (arg - 1) * h);
    double b = std::min(upper, (arg + 1) * h);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = profile(x1);
    double f2 = profile(x2);
    for (int iter = 0; iter < 200 && b - a > 1e-13 * std::max(1.0, b); ++iter) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (b - a);
        f2 = profile(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - phi * (b - a);
        f1 = profile(x1);
      }
    }
    double pk = f1 > top ? x1 : arg * h;
    // The uniform-price optimum is always in the feasible set here; seeding
    // with it keeps the policy at least as good as a single price.
    if (std::exp(u[0] - uk) <= 1.0 + instance.t()) {
      const double flat = FixedPricePolicy(instance, k).prices.front();
      if (profile(flat) >= profile(pk)) pk = flat;
    }
    const double p = shared(pk);
    PricingSolution sol;
    sol.k = k;
    sol.prices.assign(k - 1, p);
    sol.prices.push_back(pk);
    if (p > 0.0 && p == std::max(0.0, pk + u[0] - uk - log1pt) &&
        u[0] - p > uk - pk) {
      sol.mode = PricingMode::kBoundaryTight;
      sol.k1 = k - 1;
      sol.k2 = 1;
    }
    consider(std::move(sol));
  }
  return best;
}

PricingInvariantReport CheckPricingInvariants(const PricingSolution& solution,
                                              const PricedInstance& instance,
                                              double tol) {
  PricingInvariantReport report;
  const int k = solution.k;
  const std::vector<double>& p = solution.prices;
  const std::vector<double>& u = instance.utilities();
  report.utility_order = k >= 0 && k <= instance.size() &&
                         static_cast<int>(p.size()) == k &&
                         std::all_of(p.begin(), p.end(),
                                     [](double x) { return std::isfinite(x); });
  if (!report.utility_order) return report;
  report.price_bound = std::all_of(p.begin(), p.end(), [&](double x) {
    return x >= solution.revenue - tol;
  });
  report.decreasing_prices = true;
  report.decreasing_net = true;
  for (int i = 1; i < k; ++i) {
    if (p[i] > p[i - 1] + tol) report.decreasing_prices = false;
    if (u[i] == u[i - 1] && std::fabs(p[i] - p[i - 1]) > tol) {
      report.decreasing_prices = false;
    }
    if (u[i] - p[i] > u[i - 1] - p[i - 1] + tol) report.decreasing_net = false;
  }
  report.valid_pair =
      IsValidPair(Prefix(k), solution.FullPrices(instance.size()), instance);
  return report;
}

}  // namespace luceopt
