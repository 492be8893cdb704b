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

#ifndef REGSUB_DISCRETE_H_
#define REGSUB_DISCRETE_H_

#include <cstdint>
#include <vector>

#include "regsub/rng.h"
#include "regsub/set_function.h"
#include "regsub/subset_mask.h"

namespace regsub {

enum class Algorithm {
  kContinuous,
  kRandomGreedy,
  kSamplingGreedy,
  kUnconstrained,
  kSingletonScan,
};

const char* AlgorithmName(Algorithm algorithm);

// Powers (1 - 1/k)^m for m = 0..k, tabulated once in log space.
class DistortionSchedule {
 public:
  explicit DistortionSchedule(int k);

  int k() const { return k_; }
  double Power(int exponent) const { return powers_[exponent]; }
  // (1 - 1/k)^(k - (i + 1)): weight of g in the gains of iteration i.
  double StepCoefficient(int i) const { return powers_[k_ - (i + 1)]; }
  // (1 - 1/k)^(k - i): weight of g in the potential before iteration i.
  double PotentialCoefficient(int i) const { return powers_[k_ - i]; }

 private:
  int k_;
  std::vector<double> powers_;
};

// (1 - 1/k)^(k - (i + 1)) g(e | S) - l_e. Two queries, none if e is in S.
double DistortedGain(const SetFunction& g, const ModularCost& ell,
                     const DistortionSchedule& schedule, int i,
                     const SubsetMask& s, int e);
double DistortedGain(const SetFunction& g, const ModularCost& ell, int k,
                     int i, const SubsetMask& s, int e);

// max(0, DistortedGain).
inline double DistortedGainPositivePart(const SetFunction& g,
                                        const ModularCost& ell,
                                        const DistortionSchedule& schedule,
                                        int i, const SubsetMask& s, int e) {
  const double gain = DistortedGain(g, ell, schedule, i, s, e);
  return gain > 0.0 ? gain : 0.0;
}

// (1 - 1/k)^(k - i) g(S) - l(S).
double DistortedPotential(const SetFunction& g, const ModularCost& ell,
                          const DistortionSchedule& schedule, int i,
                          const SubsetMask& s);

// M_i: elements with strictly positive distorted gain, the k largest by gain
// (lower index on ties), in that order.
std::vector<int> SelectCandidates(const SetFunction& g, const ModularCost& ell,
                                  const DistortionSchedule& schedule, int i,
                                  const SubsetMask& s);

struct DiscreteStep {
  int iteration = 0;
  SubsetMask before;
  int element = -1;  // e_i, or -1 when no element was drawn
  double gain = 0.0;
  bool added = false;
};

struct DiscreteResult {
  SubsetMask set;
  Algorithm algorithm = Algorithm::kRandomGreedy;
  uint64_t g_queries = 0;
  std::vector<DiscreteStep> trace;
};

struct DiscreteOptions {
  bool record_trace = false;
};

// Cardinality constraint |S| <= k, 1 <= k <= n. For k = 1 this is the
// exhaustive scan of {} and all singletons.
DiscreteResult RunDistortedRandomGreedy(const SetFunction& g,
                                        const ModularCost& ell, int k,
                                        const RngStream& rng,
                                        const DiscreteOptions& options = {});

DiscreteResult RunSingletonScan(const SetFunction& g, const ModularCost& ell);

// alpha(x) = (8 / x^2) ln(2 / x), strictly decreasing on (0, 2).
double DeltaStarAlpha(double x);
// The unique x in (0, 2) with alpha(x) = k, bisected to width 1e-12; k >= 2.
double SolveDeltaStar(int k);

struct SamplingParams {
  double p = 0.0;
  int sample_size = 0;  // ceil(p n)
  double s = 0.0;       // (k / n) ceil(p n)
};
SamplingParams ComputeSamplingParams(int n, int k, double epsilon);

// ceil(d) for d = s (1 - U), U uniform on [0, 1), i.e. d uniform on (0, s].
int DrawRank(double s, RngStream& rng);

// Requires 2 <= k <= n and epsilon in (SolveDeltaStar(k), 1/e).
DiscreteResult RunDistortedRandomSamplingGreedy(
    const SetFunction& g, const ModularCost& ell, int k, double epsilon,
    const RngStream& rng, const DiscreteOptions& options = {});

// Picks the singleton scan for k = 1, random greedy when
// epsilon <= SolveDeltaStar(k), and random sampling greedy otherwise.
Algorithm SelectCardinalityAlgorithm(int k, double epsilon);
DiscreteResult RunCardinalityAuto(const SetFunction& g, const ModularCost& ell,
                                  int k, double epsilon, const RngStream& rng,
                                  const DiscreteOptions& options = {});

// n iterations, each drawing e_i uniformly from the ground set and adding it
// iff (1 - 1/n)^(n - (i + 1)) g(e_i | S_i) - l_{e_i} > 0.
DiscreteResult RunUnconstrainedDistortedGreedy(
    const SetFunction& g, const ModularCost& ell, const RngStream& rng,
    const DiscreteOptions& options = {});

}  // namespace regsub

#endif  // REGSUB_DISCRETE_H_
