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

#ifndef REGSUB_INSTANCE_H_
#define REGSUB_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "regsub/matroid.h"
#include "regsub/set_function.h"

namespace regsub {

// One problem: maximize g(A) - l(A), optionally over the independent sets of
// a uniform or partition matroid.
struct Instance {
  SetFunction g;
  ModularCost ell;
  std::optional<Matroid> constraint;

  int n() const { return g.n(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// JSON instance format:
//   {"n": int,
//    "g": {"type": "directed_cut", "edges": [[u, v, w], ...]}
//       | {"type": "coverage", "universe_weights": [...],
//          "covers": [[item, ...], ...]}
//       | {"type": "explicit", "table": [2^n values]}
//       | {"type": "modular", "weights": [...]},
//    "ell": [n non-negative reals],
//    "constraint": {"type": "none"} | {"type": "uniform", "k": int}
//       | {"type": "partition", "blocks": [[int, ...], ...],
//          "capacities": [int, ...]}}
// Any violation raises schema_violation naming the offending field path.
std::string SerializeInstance(const Instance& instance);
Instance ParseInstance(std::string_view text);

void SaveInstance(const std::string& path, const Instance& instance);
Instance LoadInstance(const std::string& path);

struct CutInstanceOptions {
  int n = 8;
  double edge_density = 0.4;
  double max_weight = 1.0;
  double cost_scale = 0.3;
  uint64_t seed = 0;
};

// Random digraph: each ordered pair is an edge with probability
// edge_density, weight uniform on (0, max_weight]; l_e uniform on
// [0, cost_scale * M]. Graphs with M = 0 are redrawn from a derived stream,
// up to 100 attempts.
Instance GenerateDigraphCutInstance(const CutInstanceOptions& options);

}  // namespace regsub

#endif  // REGSUB_INSTANCE_H_
