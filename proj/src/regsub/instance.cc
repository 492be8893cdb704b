// Copyright 2026 The Authors.
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

#include "regsub/instance.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "regsub/errors.h"
#include "regsub/rng.h"

namespace regsub {
namespace {

using nlohmann::json;

[[noreturn]] void Violation(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, "at " + path + ": " + what);
}

const json& Field(const json& object, const char* key,
                  const std::string& path) {
  if (!object.is_object()) Violation(path, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) Violation(path + "." + key, "missing field");
  return *it;
}

const json& Array(const json& value, const std::string& path) {
  if (!value.is_array()) Violation(path, "expected an array");
  return value;
}

int Integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) Violation(path, "expected an integer");
  return value.get<int>();
}

double Real(const json& value, const std::string& path) {
  if (!value.is_number()) Violation(path, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) Violation(path, "expected a finite number");
  return v;
}

double NonNegative(const json& value, const std::string& path) {
  const double v = Real(value, path);
  if (v < 0.0) Violation(path, "negative weight");
  return v;
}

std::string At(const std::string& path, size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

std::vector<double> NonNegativeVector(const json& value,
                                      const std::string& path) {
  std::vector<double> out;
  size_t i = 0;
  for (const json& item : Array(value, path)) {
    out.push_back(NonNegative(item, At(path, i++)));
  }
  return out;
}

std::vector<int> IntVector(const json& value, const std::string& path) {
  std::vector<int> out;
  size_t i = 0;
  for (const json& item : Array(value, path)) {
    out.push_back(Integer(item, At(path, i++)));
  }
  return out;
}

// Runs a constructor and reports its failures as schema violations at path.
template <typename F>
auto Construct(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    Violation(path, e.what());
  }
}

SetFunction ParseFunction(const json& g, int n) {
  const std::string path = "$.g";
  const json& type = Field(g, "type", path);
  if (!type.is_string()) Violation(path + ".type", "expected a string");
  const std::string kind = type.get<std::string>();
  if (kind == "directed_cut") {
    std::vector<WeightedEdge> edges;
    const std::string epath = path + ".edges";
    size_t i = 0;
    for (const json& edge : Array(Field(g, "edges", path), epath)) {
      const std::string here = At(epath, i++);
      if (!edge.is_array() || edge.size() != 3) {
        Violation(here, "expected [from, to, weight]");
      }
      edges.push_back(WeightedEdge{Integer(edge[0], here + "[0]"),
                                   Integer(edge[1], here + "[1]"),
                                   NonNegative(edge[2], here + "[2]")});
    }
    return Construct(path, [&] {
      return SetFunction::DirectedCut(n, std::move(edges));
    });
  }
  if (kind == "coverage") {
    std::vector<double> weights = NonNegativeVector(
        Field(g, "universe_weights", path), path + ".universe_weights");
    std::vector<std::vector<int>> covers;
    const std::string cpath = path + ".covers";
    size_t i = 0;
    for (const json& cover : Array(Field(g, "covers", path), cpath)) {
      covers.push_back(IntVector(cover, At(cpath, i++)));
    }
    if (static_cast<int>(covers.size()) != n) {
      Violation(cpath, "expected n = " + std::to_string(n) + " cover lists");
    }
    return Construct(path, [&] {
      return SetFunction::WeightedCoverage(std::move(weights),
                                           std::move(covers));
    });
  }
  if (kind == "explicit") {
    if (n > kMaxEnumerableN) Violation(path, "explicit tables need n <= 20");
    std::vector<double> table =
        NonNegativeVector(Field(g, "table", path), path + ".table");
    if (table.size() != (size_t{1} << n)) {
      Violation(path + ".table", "expected 2^n = " +
                                     std::to_string(size_t{1} << n) +
                                     " entries, got " +
                                     std::to_string(table.size()));
    }
    return Construct(path,
                     [&] { return SetFunction::Explicit(n, std::move(table)); });
  }
  if (kind == "modular") {
    std::vector<double> weights =
        NonNegativeVector(Field(g, "weights", path), path + ".weights");
    if (static_cast<int>(weights.size()) != n) {
      Violation(path + ".weights", "expected n entries");
    }
    return Construct(path,
                     [&] { return SetFunction::Modular(std::move(weights)); });
  }
  Violation(path + ".type", "unknown function type '" + kind + "'");
}

std::optional<Matroid> ParseConstraint(const json& c, int n) {
  const std::string path = "$.constraint";
  const json& type = Field(c, "type", path);
  if (!type.is_string()) Violation(path + ".type", "expected a string");
  const std::string kind = type.get<std::string>();
  if (kind == "none") return std::nullopt;
  if (kind == "uniform") {
    const int k = Integer(Field(c, "k", path), path + ".k");
    return Construct(path, [&] { return Matroid::Uniform(n, k); });
  }
  if (kind == "partition") {
    std::vector<std::vector<int>> blocks;
    const std::string bpath = path + ".blocks";
    size_t i = 0;
    for (const json& block : Array(Field(c, "blocks", path), bpath)) {
      blocks.push_back(IntVector(block, At(bpath, i++)));
    }
    std::vector<int> capacities =
        IntVector(Field(c, "capacities", path), path + ".capacities");
    return Construct(path, [&] {
      return Matroid::Partition(n, std::move(blocks), std::move(capacities));
    });
  }
  Violation(path + ".type", "unknown constraint type '" + kind + "'");
}

json FunctionToJson(const SetFunction& g) {
  const SetFunctionParams& params = g.params();
  if (const auto* cut = std::get_if<DirectedCutParams>(&params)) {
    json edges = json::array();
    for (const WeightedEdge& e : cut->edges) {
      edges.push_back(json::array({e.from, e.to, e.weight}));
    }
    return json{{"type", "directed_cut"}, {"edges", edges}};
  }
  if (const auto* cov = std::get_if<CoverageParams>(&params)) {
    return json{{"type", "coverage"},
                {"universe_weights", cov->universe_weights},
                {"covers", cov->covers}};
  }
  if (const auto* table = std::get_if<ExplicitTableParams>(&params)) {
    return json{{"type", "explicit"}, {"table", table->table}};
  }
  return json{{"type", "modular"},
              {"weights", std::get<ModularParams>(params).weights}};
}

json ConstraintToJson(const std::optional<Matroid>& m) {
  if (!m) return json{{"type", "none"}};
  switch (m->kind()) {
    case MatroidKind::kUniform:
      return json{{"type", "uniform"}, {"k", m->uniform_k()}};
    case MatroidKind::kPartition:
      return json{{"type", "partition"},
                  {"blocks", m->blocks()},
                  {"capacities", m->capacities()}};
    case MatroidKind::kExplicit:
      break;
  }
  throw Error(ErrorCode::kUnsupportedMatroidKind,
              "explicit matroids cannot be serialized");
}

}  // namespace

std::string SerializeInstance(const Instance& instance) {
  json doc;
  doc["n"] = instance.n();
  doc["g"] = FunctionToJson(instance.g);
  doc["ell"] = std::vector<double>(instance.ell.weights().begin(),
                                   instance.ell.weights().end());
  doc["constraint"] = ConstraintToJson(instance.constraint);
  return doc.dump(2) + "\n";
}

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Violation("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) Violation("$", "expected an object");
  const int n = Integer(Field(doc, "n", "$"), "$.n");
  if (n < 1) Violation("$.n", "n must be >= 1");
  SetFunction g = ParseFunction(Field(doc, "g", "$"), n);
  if (g.n() != n) Violation("$.g", "function ground set differs from n");
  std::vector<double> ell = NonNegativeVector(Field(doc, "ell", "$"), "$.ell");
  if (static_cast<int>(ell.size()) != n) {
    Violation("$.ell", "expected n = " + std::to_string(n) + " entries");
  }
  std::optional<Matroid> constraint =
      ParseConstraint(Field(doc, "constraint", "$"), n);
  return Instance{std::move(g), ModularCost(std::move(ell)),
                  std::move(constraint)};
}

void SaveInstance(const std::string& path, const Instance& instance) {
  const std::string text = SerializeInstance(instance);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path);
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

Instance GenerateDigraphCutInstance(const CutInstanceOptions& options) {
  if (options.n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "generator needs n >= 2");
  }
  if (!(options.edge_density > 0.0 && options.edge_density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "edge_density must be in (0,1]");
  }
  if (!(options.max_weight > 0.0) || !std::isfinite(options.max_weight)) {
    throw Error(ErrorCode::kInvalidArgument, "max_weight must be positive");
  }
  if (!(options.cost_scale >= 0.0) || !std::isfinite(options.cost_scale)) {
    throw Error(ErrorCode::kInvalidArgument, "cost_scale must be >= 0");
  }
  const RngStream root(options.seed);
  for (uint64_t attempt = 0; attempt < 100; ++attempt) {
    RngStream rng = root.Derive(attempt);
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < options.n; ++u) {
      for (int v = 0; v < options.n; ++v) {
        if (u == v || !rng.Bernoulli(options.edge_density)) continue;
        edges.push_back(
            WeightedEdge{u, v, options.max_weight * (1.0 - rng.Uniform())});
      }
    }
    SetFunction g = SetFunction::DirectedCut(options.n, std::move(edges));
    const double m = ComputeM(g);
    if (m <= 0.0) continue;
    std::vector<double> ell(options.n);
    for (double& cost : ell) cost = options.cost_scale * m * rng.Uniform();
    g.ResetQueries();
    return Instance{std::move(g), ModularCost(std::move(ell)), std::nullopt};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no graph with M > 0 after 100 attempts");
}

}  // namespace regsub
