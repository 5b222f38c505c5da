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

#ifndef LUCEOPT_LAMBERT_W_HPP_
#define LUCEOPT_LAMBERT_W_HPP_

namespace luceopt {

// Principal branch of the Lambert W function on [0, inf): the w >= 0 with
// w e^w = x. Halley iteration from ln(1 + x).
// Throws Error(kNegativeArgument) for x < 0 or NaN.
double LambertW(double x);

}  // namespace luceopt

#endif  // LUCEOPT_LAMBERT_W_HPP_
