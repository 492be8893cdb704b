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

#ifndef REGSUB_SET_FUNCTION_H_
#define REGSUB_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "regsub/subset_mask.h"

namespace regsub {

// Largest ground set for which 2^n tables and exhaustive enumeration are
// allowed.
inline constexpr int kMaxEnumerableN = 20;

struct WeightedEdge {
  int from = 0;
  int to = 0;
  double weight = 0.0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// g(A) = total weight of edges leaving A.
struct DirectedCutParams {
  int n = 0;
  std::vector<WeightedEdge> edges;
  friend bool operator==(const DirectedCutParams&,
                         const DirectedCutParams&) = default;
};

// g(A) = total weight of universe items covered by the sets of A.
struct CoverageParams {
  std::vector<double> universe_weights;
  std::vector<std::vector<int>> covers;  // covers[e] = items covered by e
  friend bool operator==(const CoverageParams&,
                         const CoverageParams&) = default;
};

// table[bits(A)] = g(A).
struct ExplicitTableParams {
  int n = 0;
  std::vector<double> table;
  friend bool operator==(const ExplicitTableParams&,
                         const ExplicitTableParams&) = default;
};

struct ModularParams {
  std::vector<double> weights;
  friend bool operator==(const ModularParams&, const ModularParams&) = default;
};

using SetFunctionParams = std::variant<DirectedCutParams, CoverageParams,
                                       ExplicitTableParams, ModularParams>;

enum class SetFunctionKind {
  kDirectedCut,
  kWeightedCoverage,
  kExplicitTable,
  kModular
};

// Value oracle for a non-negative set function. Parameters are immutable and
// shared between copies; the query counter is atomic, so Eval may be called
// from several threads at once.
//
// Copies share one counter. Fork() returns a handle with a fresh child
// counter whose increments also propagate to every ancestor, which gives
// per-run accounting while the root keeps the grand total.
class SetFunction {
 public:
  static SetFunction DirectedCut(int n, std::vector<WeightedEdge> edges);
  static SetFunction WeightedCoverage(std::vector<double> universe_weights,
                                      std::vector<std::vector<int>> covers);
  // Verified exhaustively for non-negativity and submodularity; n <= 20.
  static SetFunction Explicit(int n, std::vector<double> table);
  static SetFunction Modular(std::vector<double> weights);
  static SetFunction FromParams(const SetFunctionParams& params);

  int n() const;
  SetFunctionKind kind() const;
  const SetFunctionParams& params() const;

  // f(A); one query.
  double Eval(const SubsetMask& a) const;

  // f(A + e) - f(A); two queries, or none when e is already in A.
  double Marginal(int e, const SubsetMask& a) const;

  uint64_t queries() const;
  void ResetQueries() const;

  SetFunction Fork() const;

  // Same parameters; ignores the counters.
  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.params() == b.params();
  }

 private:
  struct Impl;
  struct Counter {
    std::atomic<uint64_t> count{0};
    std::shared_ptr<Counter> parent;
  };

  SetFunction(std::shared_ptr<const Impl> impl,
              std::shared_ptr<Counter> counter);
  void Charge(uint64_t queries) const;
  double EvalUncounted(const SubsetMask& a) const;

  std::shared_ptr<const Impl> impl_;
  std::shared_ptr<Counter> counter_;
};

// Normalized modular cost l(A) = sum of l_e over A, with every l_e >= 0.
// Evaluations are not value-oracle queries.
class ModularCost {
 public:
  ModularCost() = default;
  explicit ModularCost(std::vector<double> weights);
  static ModularCost Zero(int n) { return ModularCost(std::vector<double>(n)); }

  int n() const { return static_cast<int>(weights_.size()); }
  double operator[](int e) const { return weights_[e]; }
  double operator()(const SubsetMask& a) const;
  double Dot(std::span<const double> x) const;
  std::span<const double> weights() const { return weights_; }

  friend bool operator==(const ModularCost&, const ModularCost&) = default;

 private:
  std::vector<double> weights_;
};

// M = max{ max_e g(e|{}), -min_e g(e|Omega-e) } using 2n + 2 queries.
// With `require_non_monotone`, M <= 0 raises non_target_function.
double ComputeM(const SetFunction& g, bool require_non_monotone = false);

}  // namespace regsub

#endif  // REGSUB_SET_FUNCTION_H_
