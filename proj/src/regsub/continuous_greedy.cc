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

#include "regsub/continuous_greedy.h"

#include <cmath>
#include <string>

#include "regsub/errors.h"
#include "regsub/extensions.h"

namespace regsub {

double DistortedCoefficientContinuous(double delta, double t) {
  return std::exp(((1.0 - t) / delta - 1.0) * std::log1p(-delta));
}

int ContinuousStepCount(int n, double epsilon) {
  return static_cast<int>(
      std::ceil(2.0 + static_cast<double>(n) * n / epsilon));
}

int ContinuousSampleCount(int n, double epsilon, double delta) {
  const double nn = static_cast<double>(n) * n;
  return static_cast<int>(std::ceil(2.0 * nn / (epsilon * epsilon) *
                                    std::log(2.0 * n / (epsilon * delta))));
}

ContinuousGreedyResult RunMeasuredContinuousGreedy(
    const SetFunction& g, const ModularCost& ell, const Matroid& matroid,
    const ContinuousGreedyConfig& config, const RngStream& rng) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "continuous greedy needs epsilon in (0,1), got " +
                    std::to_string(config.epsilon));
  }
  const int n = g.n();
  if (ell.n() != n || matroid.n() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "g, l and the matroid disagree on n");
  }
  ContinuousGreedyResult result;
  result.steps = config.steps.value_or(ContinuousStepCount(n, config.epsilon));
  if (result.steps < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two time steps");
  }
  result.delta = 1.0 / result.steps;
  result.samples = config.samples.value_or(
      ContinuousSampleCount(n, config.epsilon, result.delta));

  const SetFunction oracle = g.Fork();
  const double log_decay = std::log1p(-result.delta);
  FractionalPoint y(n);
  std::vector<double> c(n);
  for (int i = 0; i < result.steps; ++i) {
    // Exponent (1 - t)/delta - 1 is the integer steps - i - 1.
    const double coefficient =
        std::exp(static_cast<double>(result.steps - i - 1) * log_decay);
    WeightEstimate estimate = EstimateMarginalWeights(
        oracle, y, result.samples, rng.Derive(static_cast<uint64_t>(i)));
    for (int e = 0; e < n; ++e) c[e] = coefficient * estimate.w[e] - ell[e];
    Matroid::LinearMaximum vertex = matroid.LinearMaximize(c);
    if (config.record_trajectory) {
      result.trajectory.push_back(
          TrajectoryStep{i, i * result.delta, y, vertex.vertex,
                         std::move(estimate.w), coefficient});
    }
    for (int e = 0; e < n; ++e) {
      if (vertex.vertex[e] > 0.0) {
        y.set(e, y[e] + result.delta * vertex.vertex[e] * (1.0 - y[e]));
      }
    }
  }
  result.y = std::move(y);
  result.g_queries = oracle.queries();
  return result;
}

double DistortedPotentialContinuous(double t, const FractionalPoint& y,
                                    double delta, const SetFunction& g,
                                    const ModularCost& ell) {
  const double coefficient =
      std::exp((1.0 - t) / delta * std::log1p(-delta));
  return coefficient * MultilinearExact(g, y) - ell.Dot(y.values());
}

}  // namespace regsub
