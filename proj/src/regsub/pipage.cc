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

#include "regsub/pipage.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "regsub/errors.h"

namespace regsub {
namespace {

double Snap(double v) {
  if (v < kIntegralSnap) return 0.0;
  if (v > 1.0 - kIntegralSnap) return 1.0;
  return v;
}

bool IsFractional(double v) { return v > 0.0 && v < 1.0; }

// Rounds the coordinates of one block in place, sharing `capacity`.
void RoundBlock(const std::vector<int>& block, int capacity,
                std::vector<double>& x, RngStream& rng) {
  for (;;) {
    int first = -1;
    int second = -1;
    for (int e : block) {
      if (!IsFractional(x[e])) continue;
      if (first == -1) {
        first = e;
      } else {
        second = e;
        break;
      }
    }
    if (first == -1) return;
    if (second == -1) {
      int ones = 0;
      for (int e : block) ones += x[e] == 1.0 ? 1 : 0;
      const bool up = ones < capacity && rng.Bernoulli(x[first]);
      x[first] = up ? 1.0 : 0.0;
      return;
    }
    const double xi = x[first];
    const double xj = x[second];
    const double alpha = std::min(1.0 - xi, xj);
    const double beta = std::min(xi, 1.0 - xj);
    // Exactly one of the pair becomes integral; the explicit assignment keeps
    // float residue from leaving both inside (0,1).
    if (rng.Bernoulli(beta / (alpha + beta))) {
      if (1.0 - xi <= xj) {
        x[first] = 1.0;
        x[second] = Snap(xj - alpha);
      } else {
        x[first] = Snap(xi + alpha);
        x[second] = 0.0;
      }
    } else {
      if (xi <= 1.0 - xj) {
        x[first] = 0.0;
        x[second] = Snap(xj + beta);
      } else {
        x[first] = Snap(xi - beta);
        x[second] = 1.0;
      }
    }
  }
}

}  // namespace

SubsetMask PipageRound(const Matroid& matroid, const FractionalPoint& x,
                       RngStream& rng, double tol) {
  if (matroid.kind() == MatroidKind::kExplicit) {
    throw Error(ErrorCode::kUnsupportedMatroidKind,
                "pipage rounding supports uniform and partition matroids");
  }
  if (!matroid.InPolytope(x, tol)) {
    throw Error(ErrorCode::kNotInPolytope, "point is outside the polytope");
  }
  const int n = x.size();
  std::vector<double> coords(n);
  for (int e = 0; e < n; ++e) coords[e] = Snap(x[e]);

  if (matroid.kind() == MatroidKind::kUniform) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    RoundBlock(all, matroid.uniform_k(), coords, rng);
  } else {
    for (size_t b = 0; b < matroid.blocks().size(); ++b) {
      RoundBlock(matroid.blocks()[b], matroid.capacities()[b], coords, rng);
    }
  }
  SubsetMask out(n);
  for (int e = 0; e < n; ++e) {
    if (coords[e] == 1.0) out.Insert(e);
  }
  return out;
}

}  // namespace regsub
