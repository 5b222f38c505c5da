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

#include "luceopt/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "luceopt/error.hpp"

namespace luceopt {
namespace {

using nlohmann::json;

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidInput, message);
}

void RejectUnknown(const json& object, std::initializer_list<const char*> keys,
                   const std::string& where) {
  if (!object.is_object()) Invalid(where + " must be an object");
  for (const auto& item : object.items()) {
    const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) {
      return item.key() == k;
    });
    if (!known) Invalid("unknown field '" + item.key() + "' in " + where);
  }
}

double Number(const json& value, const std::string& what) {
  if (!value.is_number()) Invalid(what + " must be a number");
  return value.get<double>();
}

int Id(const json& value, int n, const std::string& what) {
  if (!value.is_number_integer()) Invalid(what + " must be an integer id");
  const auto id = value.get<long long>();
  if (id < 1 || id > n) {
    throw Error(ErrorCode::kIdOutOfRange,
                what + " " + std::to_string(id) + " outside 1.." +
                    std::to_string(n));
  }
  return static_cast<int>(id) - 1;
}

std::optional<double> OptionalNumber(const json& object, const char* key,
                                     const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) return std::nullopt;
  return Number(*it, where + "." + key);
}

}  // namespace

InstanceFile ParseInstanceJson(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Invalid(std::string("malformed JSON: ") + e.what());
  }
  RejectUnknown(root, {"products", "a0", "dominance"}, "instance");
  if (!root.contains("products") || !root["products"].is_array()) {
    Invalid("instance.products must be an array");
  }
  if (!root.contains("a0")) Invalid("instance.a0 is required");
  if (!root.contains("dominance")) Invalid("instance.dominance is required");

  const json& products = root["products"];
  const int n = static_cast<int>(products.size());
  InstanceFile file;
  file.products.resize(n);
  std::vector<bool> seen(n, false);
  for (const json& p : products) {
    RejectUnknown(p, {"id", "revenue", "attractiveness", "utility"}, "product");
    if (!p.contains("id")) Invalid("product.id is required");
    const int index = Id(p["id"], n, "product.id");
    if (seen[index]) Invalid("duplicate product id " + std::to_string(index + 1));
    seen[index] = true;
    const std::string where = "product " + std::to_string(index + 1);
    file.products[index] = {OptionalNumber(p, "revenue", where),
                            OptionalNumber(p, "attractiveness", where),
                            OptionalNumber(p, "utility", where)};
  }
  file.a0 = Number(root["a0"], "instance.a0");

  const json& dom = root["dominance"];
  if (!dom.is_object() || !dom.contains("type") || !dom["type"].is_string()) {
    Invalid("dominance.type must be \"explicit\" or \"threshold\"");
  }
  const std::string type = dom["type"].get<std::string>();
  if (type == "explicit") {
    RejectUnknown(dom, {"type", "edges"}, "dominance");
    file.dominance.kind = DominanceSpec::Kind::kExplicit;
    if (dom.contains("edges")) {
      if (!dom["edges"].is_array()) Invalid("dominance.edges must be an array");
      for (const json& e : dom["edges"]) {
        if (!e.is_array() || e.size() != 2) {
          Invalid("each dominance edge must be a pair [x, y]");
        }
        file.dominance.edges.push_back(
            {Id(e[0], n, "edge endpoint"), Id(e[1], n, "edge endpoint")});
      }
    }
  } else if (type == "threshold") {
    RejectUnknown(dom, {"type", "t"}, "dominance");
    if (!dom.contains("t")) Invalid("dominance.t is required");
    file.dominance.kind = DominanceSpec::Kind::kThreshold;
    file.dominance.t = Number(dom["t"], "dominance.t");
  } else {
    Invalid("dominance.type must be \"explicit\" or \"threshold\"");
  }
  return file;
}

InstanceFile LoadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceJson(buffer.str());
}

std::string InstanceFileToJson(const InstanceFile& file) {
  json root;
  json products = json::array();
  for (std::size_t i = 0; i < file.products.size(); ++i) {
    const ProductRecord& p = file.products[i];
    json item;
    item["id"] = i + 1;
    if (p.revenue) item["revenue"] = *p.revenue;
    if (p.attractiveness) item["attractiveness"] = *p.attractiveness;
    if (p.utility) item["utility"] = *p.utility;
    products.push_back(std::move(item));
  }
  root["products"] = std::move(products);
  root["a0"] = file.a0;
  json dom;
  if (file.dominance.kind == DominanceSpec::Kind::kThreshold) {
    dom["type"] = "threshold";
    dom["t"] = file.dominance.t;
  } else {
    dom["type"] = "explicit";
    json edges = json::array();
    for (const Edge& e : file.dominance.edges) {
      edges.push_back({e.from + 1, e.to + 1});
    }
    dom["edges"] = std::move(edges);
  }
  root["dominance"] = std::move(dom);
  return root.dump(2) + "\n";
}

void SaveInstanceFile(const InstanceFile& file,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << InstanceFileToJson(file);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

Instance ToInstance(const InstanceFile& file) {
  std::vector<Product> products;
  for (std::size_t i = 0; i < file.products.size(); ++i) {
    const ProductRecord& p = file.products[i];
    if (!p.revenue || !p.attractiveness) {
      Invalid("product " + std::to_string(i + 1) +
              " needs revenue and attractiveness");
    }
    products.push_back({*p.revenue, *p.attractiveness});
  }
  const int n = static_cast<int>(products.size());
  DominanceRelation rel;
  if (file.dominance.kind == DominanceSpec::Kind::kThreshold) {
    std::vector<double> a;
    for (const Product& p : products) a.push_back(p.attractiveness);
    try {
      rel = ThresholdDominance(a, file.dominance.t);
    } catch (const Error& e) {
      Invalid(e.what());
    }
  } else {
    rel = ValidatePartialOrder(file.dominance.edges, n);
  }
  return Instance(std::move(products), file.a0, std::move(rel));
}

PricedInstance ToPricedInstance(const InstanceFile& file,
                                std::vector<int>* order) {
  if (file.dominance.kind != DominanceSpec::Kind::kThreshold) {
    Invalid("pricing requires a threshold dominance rule");
  }
  const int n = static_cast<int>(file.products.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < n; ++i) {
    if (!file.products[i].utility) {
      Invalid("product " + std::to_string(i + 1) + " needs a utility");
    }
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return *file.products[a].utility > *file.products[b].utility;
  });
  std::vector<double> u;
  for (int i : idx) u.push_back(*file.products[i].utility);
  if (order) *order = idx;
  return PricedInstance(std::move(u), file.dominance.t, file.a0);
}

InstanceFile FromInstance(const Instance& instance) {
  InstanceFile file;
  for (const Product& p : instance.products()) {
    file.products.push_back({p.revenue, p.attractiveness, std::nullopt});
  }
  file.a0 = instance.a0();
  file.dominance.kind = DominanceSpec::Kind::kExplicit;
  file.dominance.edges = instance.dominance().reduction_edges();
  return file;
}

InstanceFile FromPricedInstance(const PricedInstance& instance) {
  InstanceFile file;
  for (double u : instance.utilities()) {
    file.products.push_back({std::nullopt, std::nullopt, u});
  }
  file.a0 = instance.a0();
  file.dominance.kind = DominanceSpec::Kind::kThreshold;
  file.dominance.t = instance.t();
  return file;
}

}  // namespace luceopt
