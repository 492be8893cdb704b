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

#ifndef REGSUB_CONTINUOUS_GREEDY_H_
#define REGSUB_CONTINUOUS_GREEDY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "regsub/matroid.h"
#include "regsub/rng.h"
#include "regsub/set_function.h"

namespace regsub {

// (1 - delta)^((1 - t)/delta - 1), evaluated in log space.
double DistortedCoefficientContinuous(double delta, double t);

// Number of time steps 1/delta = ceil(2 + n^2/epsilon).
int ContinuousStepCount(int n, double epsilon);
// r = ceil(2 n^2 epsilon^-2 ln(2 n epsilon^-1 delta^-1)).
int ContinuousSampleCount(int n, double epsilon, double delta);

struct ContinuousGreedyConfig {
  double epsilon = 0.1;
  // Desk-scale overrides; unset means the formulas above.
  std::optional<int> samples;
  std::optional<int> steps;
  bool record_trajectory = true;
};

struct TrajectoryStep {
  int index = 0;  // t = index * delta
  double t = 0.0;
  FractionalPoint y;  // y(t), before the update
  FractionalPoint z;  // z(t)
  std::vector<double> w;
  double coefficient = 0.0;
};

struct ContinuousGreedyResult {
  FractionalPoint y;  // y(1)
  std::vector<TrajectoryStep> trajectory;
  int steps = 0;
  double delta = 0.0;
  int samples = 0;
  uint64_t g_queries = 0;
};

// Measured continuous greedy with the distorted objective over a matroid
// polytope. Step i uses the RNG stream rng.Derive(i) and spends exactly
// 2 n r queries, so a run costs 2 n r / delta.
ContinuousGreedyResult RunMeasuredContinuousGreedy(
    const SetFunction& g, const ModularCost& ell, const Matroid& matroid,
    const ContinuousGreedyConfig& config, const RngStream& rng);

// (1 - delta)^((1 - t)/delta) G(y) - L(y) with G exact; n <= 20.
double DistortedPotentialContinuous(double t, const FractionalPoint& y,
                                    double delta, const SetFunction& g,
                                    const ModularCost& ell);

}  // namespace regsub

#endif  // REGSUB_CONTINUOUS_GREEDY_H_
