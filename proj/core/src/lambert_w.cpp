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

#include "luceopt/lambert_w.hpp"

#include <cmath>
#include <limits>

#include "luceopt/error.hpp"

namespace luceopt {

double LambertW(double x) {
  if (!(x >= 0.0)) {
    throw Error(ErrorCode::kNegativeArgument, "LambertW needs x >= 0");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  double w = std::log1p(x);
  for (int iter = 0; iter < 50; ++iter) {
    // Work with f(w) = w - x e^{-w} for large x so e^w never overflows.
    const double ew = std::exp(-w);
    const double f = w - x * ew;
    const double f1 = 1.0 + x * ew;
    const double f2 = -x * ew;
    const double step = 2.0 * f * f1 / (2.0 * f1 * f1 - f * f2);
    const double next = w - step;
    if (!(std::fabs(step) > 4.0 * std::numeric_limits<double>::epsilon() *
                                std::fabs(next))) {
      return next;
    }
    w = next;
  }
  return w;
}

}  // namespace luceopt
