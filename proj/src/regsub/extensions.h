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

#ifndef REGSUB_EXTENSIONS_H_
#define REGSUB_EXTENSIONS_H_

#include <cstdint>
#include <vector>

#include "regsub/matroid.h"
#include "regsub/rng.h"
#include "regsub/set_function.h"
#include "regsub/subset_mask.h"

namespace regsub {

// R_x: each element included independently with probability x_e.
SubsetMask SampleRandomSubset(const FractionalPoint& x, RngStream& rng);

struct WeightEstimate {
  std::vector<double> w;
  int samples_used = 0;
  uint64_t queries_spent = 0;
};

// Monte-Carlo estimate of E[g(e | R_y)] for every e: the average of
// g(R + e) - g(R) over `samples` fresh draws R of R_y per element. Element e
// draws from stream.Derive(e), so results do not depend on evaluation order.
// Every term costs exactly two queries, including when e lands in R.
WeightEstimate EstimateMarginalWeights(const SetFunction& g,
                                       const FractionalPoint& y, int samples,
                                       const RngStream& stream);

// Exact multilinear extension by enumeration over 2^n subsets; n <= 20.
double MultilinearExact(const SetFunction& f, const FractionalPoint& x);

// E[f(e | R_x)] = F(x v 1_e) - F(x), exact; n <= 20.
double ExpectedMarginalExact(const SetFunction& f, const FractionalPoint& x,
                             int e);

// dF/dx_e = F(x v 1_e) - F(x ^ 1_{Omega-e}), exact; n <= 20.
std::vector<double> MultilinearGradientExact(const SetFunction& f,
                                             const FractionalPoint& x);

// Lovasz extension: integral over lambda in (0,1] of f({e : x_e >= lambda}),
// summed over the at most n + 1 distinct threshold sets.
double LovaszExact(const SetFunction& f, const FractionalPoint& x);

}  // namespace regsub

#endif  // REGSUB_EXTENSIONS_H_
