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

#ifndef REGSUB_EXACT_H_
#define REGSUB_EXACT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "regsub/matroid.h"
#include "regsub/rng.h"
#include "regsub/set_function.h"
#include "regsub/subset_mask.h"

namespace regsub {

struct Unconstrained {};
struct CardinalityAtMost {
  int k = 0;
};
using Constraint = std::variant<Unconstrained, CardinalityAtMost, Matroid>;

struct OptResult {
  SubsetMask set;
  double g_value = 0.0;
  double ell_value = 0.0;
  double objective() const { return g_value - ell_value; }
};

// Exhaustive maximizer of g(A) - l(A) over feasible A; n <= 20. Ties go to
// the smaller set, then the lexicographically smaller element list.
OptResult BruteForceOpt(const SetFunction& g, const ModularCost& ell,
                        const Constraint& constraint);

enum class BoundForm {
  kMatroidContinuous,       // e^-1 g(OPT) - l(OPT) - 5 eps M
  kCardinalityRandomGreedy, // (1-1/k)^(k-1) g(OPT) - l(OPT)
  kCardinalitySampling,     // (1-eps) [(1-1/k)^(k-1) g(OPT) - l(OPT)]
  kUnconstrained,           // (1-1/n)^(n-1) g(OPT) - l(OPT)
};

struct BoundParams {
  std::optional<double> epsilon;
  std::optional<double> m;
  std::optional<int> k;
  std::optional<int> n;
};

// Right-hand side of the guarantee; missing parameters raise
// invalid_argument.
double GuaranteeBound(BoundForm form, double g_opt, double ell_opt,
                      const BoundParams& params);

struct Expectation {
  double mean = 0.0;
  double std_error = 0.0;  // unbiased sample variance / reps, square-rooted
  std::vector<double> values;
};

// Replica i runs on RngStream(base_seed).Derive(i); values are kept in
// replica order whatever the thread count.
Expectation EmpiricalExpectation(
    const std::function<double(const RngStream&)>& runner, int reps,
    uint64_t base_seed, int threads = 1);

// Mean and standard error of `values`; needs at least two entries for a
// non-zero error.
Expectation Summarize(std::vector<double> values);

// Calls body(i) for i in [0, count) on up to `threads` workers.
void ParallelFor(int count, int threads, const std::function<void(int)>& body);

}  // namespace regsub

#endif  // REGSUB_EXACT_H_
