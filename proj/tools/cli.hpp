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

#ifndef LUCEOPT_TOOLS_CLI_HPP_
#define LUCEOPT_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "luceopt/error.hpp"

namespace luceopt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInfeasible = 2;

// Input and validation failures map to 1; oversized, unsupported or
// infeasible problems to 2.
int ExitCodeFor(ErrorCode code);

// args excludes the program name. Results go to out, diagnostics to err.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

struct VerifyOutcome {
  int cases = 0;
  int failures = 0;
};

// Solver-versus-oracle comparisons on seeded random instances. One line per
// mismatch is written to diffs. Throws Error(kInvalidInput) when max_n is
// beyond the oracle's reach.
VerifyOutcome RunVerify(std::string_view suite, int count, std::uint64_t seed,
                        int max_n, std::ostream& diffs);

}  // namespace luceopt::cli

#endif  // LUCEOPT_TOOLS_CLI_HPP_
