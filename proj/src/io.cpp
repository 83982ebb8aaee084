// Copyright 2026 The efx-chores Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "efx/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "efx/errors.hpp"

namespace efx {
namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw InputError("malformed JSON");
  return doc;
}

Rational cost_from_json(const json& value) {
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const Rational num = Rational::from_decimal(text.substr(0, slash));
      const Rational den = Rational::from_decimal(text.substr(slash + 1));
      return num / den;
    }
    return Rational::from_decimal(text);
  }
  if (value.is_number_float())
    throw InputError(
        "costs: non-integer numbers lose precision; write them as decimal "
        "strings");
  throw InputError("costs: expected an integer or a decimal string");
}

json cost_to_json(const Rational& value) {
  if (value.is_integer()) return json(value.num());
  return json(value.to_string());  // decimal when finite, p/q otherwise
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") ||
      !doc.contains("costs"))
    throw InputError("instance: expected object with n, m, costs");
  if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer())
    throw InputError("instance: n and m must be integers");
  const int n = doc["n"].get<int>();
  const int m = doc["m"].get<int>();
  if (!doc["costs"].is_array())
    throw InputError("instance: costs must be an array of rows");
  std::vector<std::vector<Rational>> costs;
  for (const json& row : doc["costs"]) {
    if (!row.is_array()) throw InputError("instance: cost row must be an array");
    std::vector<Rational> parsed;
    parsed.reserve(row.size());
    for (const json& value : row) parsed.push_back(cost_from_json(value));
    costs.push_back(std::move(parsed));
  }
  return Instance(n, m, std::move(costs));
}

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["n"] = inst.n();
  doc["m"] = inst.m();
  json rows = json::array();
  for (AgentId i = 0; i < inst.n(); ++i) {
    json row = json::array();
    for (ChoreId e = 0; e < inst.m(); ++e) row.push_back(cost_to_json(inst.cost(i, e)));
    rows.push_back(std::move(row));
  }
  doc["costs"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Instance read_instance_file(const std::string& path) {
  return parse_instance_json(read_file(path));
}

void write_instance_file(const std::string& path, const Instance& inst) {
  write_file(path, instance_to_json(inst));
}

Allocation parse_allocation_json(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("bundles") || !doc["bundles"].is_array())
    throw InputError("allocation: expected object with a bundles array");
  std::vector<std::vector<ChoreId>> bundles;
  for (const json& bundle : doc["bundles"]) {
    if (!bundle.is_array())
      throw InputError("allocation: each bundle must be an array");
    std::vector<ChoreId> ids;
    for (const json& id : bundle) {
      if (!id.is_number_integer())
        throw InputError("allocation: chore ids must be integers");
      ids.push_back(id.get<int>());
    }
    bundles.push_back(std::move(ids));
  }
  return Allocation::from_bundles(OwnerKind::kAgents, std::move(bundles));
}

std::string allocation_to_json(const Allocation& alloc) {
  json doc;
  json bundles = json::array();
  for (int k = 0; k < alloc.size(); ++k) bundles.push_back(alloc.bundle(k));
  doc["bundles"] = std::move(bundles);
  return doc.dump(2) + "\n";
}

Allocation read_allocation_file(const std::string& path) {
  return parse_allocation_json(read_file(path));
}

void write_allocation_file(const std::string& path, const Allocation& alloc) {
  write_file(path, allocation_to_json(alloc));
}

std::string graph_to_json(const EfxGraph& g) {
  json doc;
  json edges = json::array();
  for (const auto& [i, u] : g.edge_list()) edges.push_back(json::array({i, u}));
  json min_edges = json::array();
  for (const auto& [i, u] : g.min_edge_list())
    min_edges.push_back(json::array({i, u}));
  doc["edges"] = std::move(edges);
  doc["min_edges"] = std::move(min_edges);
  return doc.dump(2) + "\n";
}

}  // namespace efx
