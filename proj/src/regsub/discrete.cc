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

#include "regsub/discrete.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "regsub/errors.h"

namespace regsub {
namespace {

void RequireSameSize(const SetFunction& g, const ModularCost& ell) {
  if (g.n() != ell.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "g and l disagree on n");
  }
}

void RequireK(int k, int n, int min_k) {
  if (k < min_k || k > n) {
    throw Error(ErrorCode::kInvalidK,
                "k = " + std::to_string(k) + " outside [" +
                    std::to_string(min_k) + ", " + std::to_string(n) + "]");
  }
}

void RequireEpsilonBelowInverseE(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0 / std::numbers::e)) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "epsilon = " + std::to_string(epsilon) +
                    " outside (0, 1/e)");
  }
}

// Gains of `candidates` at iteration i, ordered by non-increasing gain and
// then by element index.
std::vector<std::pair<double, int>> RankedGains(
    const SetFunction& g, const ModularCost& ell,
    const DistortionSchedule& schedule, int i, const SubsetMask& s,
    const std::vector<int>& candidates) {
  std::vector<std::pair<double, int>> ranked;
  ranked.reserve(candidates.size());
  for (int e : candidates) {
    ranked.emplace_back(DistortedGain(g, ell, schedule, i, s, e), e);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  return ranked;
}

}  // namespace

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kContinuous:
      return "continuous";
    case Algorithm::kRandomGreedy:
      return "random-greedy";
    case Algorithm::kSamplingGreedy:
      return "sampling-greedy";
    case Algorithm::kUnconstrained:
      return "unconstrained";
    case Algorithm::kSingletonScan:
      return "singleton-scan";
  }
  return "unknown";
}

DistortionSchedule::DistortionSchedule(int k) : k_(k), powers_(k + 1, 1.0) {
  if (k < 1) throw Error(ErrorCode::kInvalidK, "schedule needs k >= 1");
  if (k == 1) {
    // 0^0 = 1, 0^1 = 0.
    powers_[1] = 0.0;
    return;
  }
  const double log_base = std::log1p(-1.0 / k);
  for (int m = 1; m <= k; ++m) powers_[m] = std::exp(m * log_base);
}

double DistortedGain(const SetFunction& g, const ModularCost& ell,
                     const DistortionSchedule& schedule, int i,
                     const SubsetMask& s, int e) {
  if (i < 0 || i >= schedule.k()) {
    throw Error(ErrorCode::kInvalidArgument, "iteration outside [0, k)");
  }
  return schedule.StepCoefficient(i) * g.Marginal(e, s) - ell[e];
}

double DistortedGain(const SetFunction& g, const ModularCost& ell, int k,
                     int i, const SubsetMask& s, int e) {
  return DistortedGain(g, ell, DistortionSchedule(k), i, s, e);
}

double DistortedPotential(const SetFunction& g, const ModularCost& ell,
                          const DistortionSchedule& schedule, int i,
                          const SubsetMask& s) {
  return schedule.PotentialCoefficient(i) * g.Eval(s) - ell(s);
}

std::vector<int> SelectCandidates(const SetFunction& g, const ModularCost& ell,
                                  const DistortionSchedule& schedule, int i,
                                  const SubsetMask& s) {
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> chosen;
  for (const auto& [gain, e] : RankedGains(g, ell, schedule, i, s, all)) {
    if (gain <= 0.0 || static_cast<int>(chosen.size()) == schedule.k()) break;
    chosen.push_back(e);
  }
  return chosen;
}

DiscreteResult RunSingletonScan(const SetFunction& g, const ModularCost& ell) {
  RequireSameSize(g, ell);
  const SetFunction oracle = g.Fork();
  const int n = g.n();
  DiscreteResult result;
  result.algorithm = Algorithm::kSingletonScan;
  result.set = SubsetMask(n);
  double best = oracle.Eval(result.set);
  for (int e = 0; e < n; ++e) {
    SubsetMask single = SubsetMask(n).With(e);
    const double value = oracle.Eval(single) - ell[e];
    if (value > best) {
      best = value;
      result.set = std::move(single);
    }
  }
  result.g_queries = oracle.queries();
  return result;
}

DiscreteResult RunDistortedRandomGreedy(const SetFunction& g,
                                        const ModularCost& ell, int k,
                                        const RngStream& rng,
                                        const DiscreteOptions& options) {
  RequireSameSize(g, ell);
  RequireK(k, g.n(), 1);
  if (k == 1) return RunSingletonScan(g, ell);

  const SetFunction oracle = g.Fork();
  const DistortionSchedule schedule(k);
  DiscreteResult result;
  result.algorithm = Algorithm::kRandomGreedy;
  result.set = SubsetMask(g.n());
  for (int i = 0; i < k; ++i) {
    const std::vector<int> candidates =
        SelectCandidates(oracle, ell, schedule, i, result.set);
    // One uniform slot out of k: slots below |M_i| pick that candidate, the
    // rest keep S_i, giving probability 1/k per candidate.
    RngStream step = rng.Derive(static_cast<uint64_t>(i));
    const auto slot = static_cast<size_t>(step.UniformIndex(k));
    DiscreteStep record{i, options.record_trace ? result.set : SubsetMask(),
                        -1, 0.0, false};
    if (slot < candidates.size()) {
      record.element = candidates[slot];
      record.added = true;
      result.set.Insert(candidates[slot]);
    }
    if (options.record_trace) result.trace.push_back(std::move(record));
  }
  result.g_queries = oracle.queries();
  return result;
}

double DeltaStarAlpha(double x) { return 8.0 / (x * x) * std::log(2.0 / x); }

double SolveDeltaStar(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidK, "delta* needs k >= 2");
  double lo = 0.0;
  double hi = 2.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (DeltaStarAlpha(mid) > k) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SamplingParams ComputeSamplingParams(int n, int k, double epsilon) {
  SamplingParams params;
  params.p = 8.0 / (k * epsilon * epsilon) * std::log(2.0 / epsilon);
  params.sample_size = static_cast<int>(std::ceil(params.p * n));
  params.s = static_cast<double>(k) / n * params.sample_size;
  return params;
}

int DrawRank(double s, RngStream& rng) {
  const double d = s * (1.0 - rng.Uniform());
  return static_cast<int>(std::ceil(d));
}

DiscreteResult RunDistortedRandomSamplingGreedy(
    const SetFunction& g, const ModularCost& ell, int k, double epsilon,
    const RngStream& rng, const DiscreteOptions& options) {
  RequireSameSize(g, ell);
  const int n = g.n();
  RequireK(k, n, 2);
  const double delta_star = SolveDeltaStar(k);
  if (!(epsilon > delta_star && epsilon < 1.0 / std::numbers::e)) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "sampling greedy needs epsilon in (" +
                    std::to_string(delta_star) + ", 1/e), got " +
                    std::to_string(epsilon));
  }
  const SamplingParams params = ComputeSamplingParams(n, k, epsilon);

  const SetFunction oracle = g.Fork();
  const DistortionSchedule schedule(k);
  DiscreteResult result;
  result.algorithm = Algorithm::kSamplingGreedy;
  result.set = SubsetMask(n);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> sample(params.sample_size);
  for (int i = 0; i < k; ++i) {
    RngStream step = rng.Derive(static_cast<uint64_t>(i));
    // Partial Fisher-Yates: the first sample_size slots of the pool become a
    // uniform subset regardless of the pool's previous order.
    for (int j = 0; j < params.sample_size; ++j) {
      const int pick = j + static_cast<int>(step.UniformIndex(n - j));
      std::swap(pool[j], pool[pick]);
      sample[j] = pool[j];
    }
    const auto ranked =
        RankedGains(oracle, ell, schedule, i, result.set, sample);
    const int rank = std::min(DrawRank(params.s, step), params.sample_size);
    const auto& [gain, element] = ranked[rank - 1];
    DiscreteStep record{i, options.record_trace ? result.set : SubsetMask(),
                        element, gain, gain > 0.0};
    if (gain > 0.0) result.set.Insert(element);
    if (options.record_trace) result.trace.push_back(std::move(record));
  }
  result.g_queries = oracle.queries();
  return result;
}

Algorithm SelectCardinalityAlgorithm(int k, double epsilon) {
  RequireEpsilonBelowInverseE(epsilon);
  if (k < 1) throw Error(ErrorCode::kInvalidK, "k must be >= 1");
  if (k == 1) return Algorithm::kSingletonScan;
  return epsilon <= SolveDeltaStar(k) ? Algorithm::kRandomGreedy
                                      : Algorithm::kSamplingGreedy;
}

DiscreteResult RunCardinalityAuto(const SetFunction& g, const ModularCost& ell,
                                  int k, double epsilon, const RngStream& rng,
                                  const DiscreteOptions& options) {
  RequireK(k, g.n(), 1);
  switch (SelectCardinalityAlgorithm(k, epsilon)) {
    case Algorithm::kSingletonScan:
      return RunSingletonScan(g, ell);
    case Algorithm::kSamplingGreedy:
      return RunDistortedRandomSamplingGreedy(g, ell, k, epsilon, rng,
                                              options);
    default:
      return RunDistortedRandomGreedy(g, ell, k, rng, options);
  }
}

DiscreteResult RunUnconstrainedDistortedGreedy(const SetFunction& g,
                                               const ModularCost& ell,
                                               const RngStream& rng,
                                               const DiscreteOptions& options) {
  RequireSameSize(g, ell);
  const int n = g.n();
  const SetFunction oracle = g.Fork();
  const DistortionSchedule schedule(n);
  DiscreteResult result;
  result.algorithm = Algorithm::kUnconstrained;
  result.set = SubsetMask(n);
  for (int i = 0; i < n; ++i) {
    RngStream step = rng.Derive(static_cast<uint64_t>(i));
    const int e = static_cast<int>(step.UniformIndex(n));
    const double gain = DistortedGain(oracle, ell, schedule, i, result.set, e);
    DiscreteStep record{i, options.record_trace ? result.set : SubsetMask(), e,
                        gain, gain > 0.0};
    if (gain > 0.0) result.set.Insert(e);
    if (options.record_trace) result.trace.push_back(std::move(record));
  }
  result.g_queries = oracle.queries();
  return result;
}

}  // namespace regsub
