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

#ifndef REGSUB_PIPAGE_H_
#define REGSUB_PIPAGE_H_

#include "regsub/matroid.h"
#include "regsub/rng.h"
#include "regsub/subset_mask.h"

namespace regsub {

// Coordinates within this distance of 0 or 1 are treated as integral.
inline constexpr double kIntegralSnap = 1e-12;

// Randomized pipage rounding of a point of a uniform or partition matroid
// polytope to an independent set. Within each block the two lowest-indexed
// fractional coordinates i, j are moved along +-(1_i - 1_j) until at most
// one fractional coordinate remains, which is then rounded up with
// probability x_e when capacity allows. Every move keeps the block sum and
// each coordinate's expectation, and the multilinear extension of a
// submodular function is convex along these directions, so
// E[f(S)] >= F(x).
SubsetMask PipageRound(const Matroid& matroid, const FractionalPoint& x,
                       RngStream& rng, double tol = kPolytopeTolerance);

}  // namespace regsub

#endif  // REGSUB_PIPAGE_H_
