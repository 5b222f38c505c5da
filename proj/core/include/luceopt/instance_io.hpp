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

#ifndef LUCEOPT_INSTANCE_IO_HPP_
#define LUCEOPT_INSTANCE_IO_HPP_

// JSON instance files:
//
//   {"products":[{"id":1,"revenue":88.0,"attractiveness":13.0,"utility":2.0}],
//    "a0":55.0,
//    "dominance":{"type":"explicit","edges":[[2,1],[2,3]]}}
//
// or "dominance":{"type":"threshold","t":0.6}. Ids are 1-based and must be a
// permutation of 1..n. Unknown fields are rejected.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "luceopt/model.hpp"

namespace luceopt {

struct DominanceSpec {
  enum class Kind { kExplicit, kThreshold };
  Kind kind = Kind::kExplicit;
  std::vector<Edge> edges;  // 0-based, kExplicit only
  double t = 0.0;           // kThreshold only
};

struct ProductRecord {
  std::optional<double> revenue;
  std::optional<double> attractiveness;
  std::optional<double> utility;
};

// Products are stored in id order: products[i] has id i + 1.
struct InstanceFile {
  std::vector<ProductRecord> products;
  double a0 = 0.0;
  DominanceSpec dominance;
};

// Throws Error(kInvalidInput) on malformed JSON or schema violations.
InstanceFile ParseInstanceJson(std::string_view text);
// Throws Error(kIo) if the file cannot be read.
InstanceFile LoadInstanceFile(const std::filesystem::path& path);

std::string InstanceFileToJson(const InstanceFile& file);
void SaveInstanceFile(const InstanceFile& file,
                      const std::filesystem::path& path);

// Requires revenue and attractiveness on every product. A threshold rule is
// applied to the attractiveness values.
Instance ToInstance(const InstanceFile& file);

// Requires utility on every product and a threshold rule. The products are
// re-indexed by non-increasing utility (stable in id); order receives the
// 0-based file index of each sorted position.
PricedInstance ToPricedInstance(const InstanceFile& file,
                                std::vector<int>* order = nullptr);

InstanceFile FromInstance(const Instance& instance);
InstanceFile FromPricedInstance(const PricedInstance& instance);

}  // namespace luceopt

#endif  // LUCEOPT_INSTANCE_IO_HPP_
