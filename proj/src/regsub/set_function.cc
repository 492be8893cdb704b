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

#include "regsub/set_function.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "regsub/errors.h"

namespace regsub {
namespace {

void RequireNonNegativeFinite(double value, const std::string& what) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument, what + " is not finite");
  }
  if (value < 0.0) {
    throw Error(ErrorCode::kNegativeValue,
                what + " = " + std::to_string(value) + " is negative");
  }
}

// Local four-point condition f(S+a) + f(S+b) >= f(S+a+b) + f(S) over all S
// and a, b outside S. It is equivalent to submodularity.
void CheckSubmodularTable(int n, const std::vector<double>& table) {
  double scale = 1.0;
  for (double v : table) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * scale;
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t s = 0; s < count; ++s) {
    for (int a = 0; a < n; ++a) {
      const uint64_t bit_a = uint64_t{1} << a;
      if (s & bit_a) continue;
      for (int b = a + 1; b < n; ++b) {
        const uint64_t bit_b = uint64_t{1} << b;
        if (s & bit_b) continue;
        const double lhs = table[s | bit_a] + table[s | bit_b];
        const double rhs = table[s | bit_a | bit_b] + table[s];
        if (lhs < rhs - tol) {
          throw Error(ErrorCode::kNotSubmodular,
                      "table violates submodularity at S=" +
                          SubsetMask::FromBits(n, s).ToString() + ", a=" +
                          std::to_string(a) + ", b=" + std::to_string(b));
        }
      }
    }
  }
}

}  // namespace

struct SetFunction::Impl {
  SetFunctionParams params;
  int n = 0;
};

SetFunction::SetFunction(std::shared_ptr<const Impl> impl,
                         std::shared_ptr<Counter> counter)
    : impl_(std::move(impl)), counter_(std::move(counter)) {}

SetFunction SetFunction::DirectedCut(int n, std::vector<WeightedEdge> edges) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  for (const WeightedEdge& edge : edges) {
    if (edge.from < 0 || edge.from >= n || edge.to < 0 || edge.to >= n) {
      throw Error(ErrorCode::kDimensionMismatch, "edge endpoint out of range");
    }
    if (edge.from == edge.to) {
      throw Error(ErrorCode::kInvalidArgument, "self-loop edge");
    }
    RequireNonNegativeFinite(edge.weight, "edge weight");
  }
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->params = DirectedCutParams{n, std::move(edges)};
  return SetFunction(std::move(impl), std::make_shared<Counter>());
}

SetFunction SetFunction::WeightedCoverage(
    std::vector<double> universe_weights,
    std::vector<std::vector<int>> covers) {
  if (covers.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "coverage needs n >= 1");
  }
  for (double w : universe_weights) RequireNonNegativeFinite(w, "item weight");
  const int items = static_cast<int>(universe_weights.size());
  for (const auto& cover : covers) {
    for (int item : cover) {
      if (item < 0 || item >= items) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "cover references item " + std::to_string(item));
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->n = static_cast<int>(covers.size());
  impl->params = CoverageParams{std::move(universe_weights), std::move(covers)};
  return SetFunction(std::move(impl), std::make_shared<Counter>());
}

SetFunction SetFunction::Explicit(int n, std::vector<double> table) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (n > kMaxEnumerableN) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "explicit tables are limited to n <= 20");
  }
  if (table.size() != (size_t{1} << n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "explicit table must have 2^n entries");
  }
  for (double v : table) RequireNonNegativeFinite(v, "table value");
  CheckSubmodularTable(n, table);
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->params = ExplicitTableParams{n, std::move(table)};
  return SetFunction(std::move(impl), std::make_shared<Counter>());
}

SetFunction SetFunction::Modular(std::vector<double> weights) {
  if (weights.empty()) throw Error(ErrorCode::kInvalidArgument, "n >= 1");
  for (double w : weights) RequireNonNegativeFinite(w, "modular weight");
  auto impl = std::make_shared<Impl>();
  impl->n = static_cast<int>(weights.size());
  impl->params = ModularParams{std::move(weights)};
  return SetFunction(std::move(impl), std::make_shared<Counter>());
}

SetFunction SetFunction::FromParams(const SetFunctionParams& params) {
  struct Visitor {
    SetFunction operator()(const DirectedCutParams& p) const {
      return DirectedCut(p.n, p.edges);
    }
    SetFunction operator()(const CoverageParams& p) const {
      return WeightedCoverage(p.universe_weights, p.covers);
    }
    SetFunction operator()(const ExplicitTableParams& p) const {
      return Explicit(p.n, p.table);
    }
    SetFunction operator()(const ModularParams& p) const {
      return Modular(p.weights);
    }
  };
  return std::visit(Visitor{}, params);
}

int SetFunction::n() const { return impl_->n; }

SetFunctionKind SetFunction::kind() const {
  return static_cast<SetFunctionKind>(impl_->params.index());
}

const SetFunctionParams& SetFunction::params() const { return impl_->params; }

void SetFunction::Charge(uint64_t queries) const {
  for (Counter* c = counter_.get(); c != nullptr; c = c->parent.get()) {
    c->count.fetch_add(queries, std::memory_order_relaxed);
  }
}

double SetFunction::EvalUncounted(const SubsetMask& a) const {
  const SetFunctionParams& params = impl_->params;
  if (const auto* cut = std::get_if<DirectedCutParams>(&params)) {
    double total = 0.0;
    for (const WeightedEdge& edge : cut->edges) {
      if (a.Contains(edge.from) && !a.Contains(edge.to)) total += edge.weight;
    }
    return total;
  }
  if (const auto* cov = std::get_if<CoverageParams>(&params)) {
    std::vector<char> covered(cov->universe_weights.size(), 0);
    double total = 0.0;
    for (int e : a.Elements()) {
      for (int item : cov->covers[e]) {
        if (!covered[item]) {
          covered[item] = 1;
          total += cov->universe_weights[item];
        }
      }
    }
    return total;
  }
  if (const auto* table = std::get_if<ExplicitTableParams>(&params)) {
    return table->table[a.LowBits()];
  }
  const auto& modular = std::get<ModularParams>(params);
  double total = 0.0;
  for (int e : a.Elements()) total += modular.weights[e];
  return total;
}

double SetFunction::Eval(const SubsetMask& a) const {
  if (a.universe_size() != impl_->n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "subset over " + std::to_string(a.universe_size()) +
                    " elements given to a function over " +
                    std::to_string(impl_->n));
  }
  Charge(1);
  return EvalUncounted(a);
}

double SetFunction::Marginal(int e, const SubsetMask& a) const {
  if (e < 0 || e >= impl_->n) {
    throw Error(ErrorCode::kDimensionMismatch, "element out of range");
  }
  if (a.universe_size() == impl_->n && a.Contains(e)) return 0.0;
  return Eval(a.With(e)) - Eval(a);
}

uint64_t SetFunction::queries() const {
  return counter_->count.load(std::memory_order_relaxed);
}

void SetFunction::ResetQueries() const {
  counter_->count.store(0, std::memory_order_relaxed);
}

SetFunction SetFunction::Fork() const {
  auto child = std::make_shared<Counter>();
  child->parent = counter_;
  return SetFunction(impl_, std::move(child));
}

ModularCost::ModularCost(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double w : weights_) RequireNonNegativeFinite(w, "cost");
}

double ModularCost::operator()(const SubsetMask& a) const {
  if (a.universe_size() != n()) {
    throw Error(ErrorCode::kDimensionMismatch, "cost/subset size mismatch");
  }
  double total = 0.0;
  for (int e : a.Elements()) total += weights_[e];
  return total;
}

double ModularCost::Dot(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n()) {
    throw Error(ErrorCode::kDimensionMismatch, "cost/vector size mismatch");
  }
  double total = 0.0;
  for (int e = 0; e < n(); ++e) total += weights_[e] * x[e];
  return total;
}

double ComputeM(const SetFunction& g, bool require_non_monotone) {
  const int n = g.n();
  const SubsetMask empty(n);
  const SubsetMask full = SubsetMask::Full(n);
  const double g_empty = g.Eval(empty);
  const double g_full = g.Eval(full);
  double best_first = -std::numeric_limits<double>::infinity();
  double worst_last = std::numeric_limits<double>::infinity();
  for (int e = 0; e < n; ++e) {
    best_first = std::max(best_first, g.Eval(empty.With(e)) - g_empty);
    worst_last = std::min(worst_last, g_full - g.Eval(full.Without(e)));
  }
  const double m = std::max(best_first, -worst_last);
  if (require_non_monotone && m <= 0.0) {
    throw Error(ErrorCode::kNonTargetFunction,
                "M = " + std::to_string(m) + " <= 0; g is not non-monotone");
  }
  return m;
}

}  // namespace regsub
