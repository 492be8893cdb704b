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

#include "regsub/extensions.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "regsub/errors.h"

namespace regsub {
namespace {

void RequireEnumerable(int n) {
  if (n > kMaxEnumerableN) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "exact enumeration needs n <= 20, got n = " +
                    std::to_string(n));
  }
}

void RequireSameSize(const SetFunction& f, const FractionalPoint& x) {
  if (f.n() != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "point/function size mismatch");
  }
}

}  // namespace

SubsetMask SampleRandomSubset(const FractionalPoint& x, RngStream& rng) {
  SubsetMask out(x.size());
  for (int e = 0; e < x.size(); ++e) {
    if (rng.Bernoulli(x[e])) out.Insert(e);
  }
  return out;
}

WeightEstimate EstimateMarginalWeights(const SetFunction& g,
                                       const FractionalPoint& y, int samples,
                                       const RngStream& stream) {
  RequireSameSize(g, y);
  if (samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  }
  const int n = g.n();
  WeightEstimate out;
  out.w.assign(n, 0.0);
  out.samples_used = samples;
  for (int e = 0; e < n; ++e) {
    RngStream rng = stream.Derive(static_cast<uint64_t>(e));
    double total = 0.0;
    for (int i = 0; i < samples; ++i) {
      SubsetMask r = SampleRandomSubset(y, rng);
      const double without = g.Eval(r);
      r.Insert(e);
      total += g.Eval(r) - without;
    }
    out.w[e] = total / samples;
  }
  out.queries_spent = 2ULL * n * samples;
  return out;
}

double MultilinearExact(const SetFunction& f, const FractionalPoint& x) {
  RequireSameSize(f, x);
  const int n = f.n();
  RequireEnumerable(n);
  const uint64_t count = uint64_t{1} << n;
  double total = 0.0;
  for (uint64_t s = 0; s < count; ++s) {
    double weight = 1.0;
    for (int e = 0; e < n && weight != 0.0; ++e) {
      weight *= ((s >> e) & 1U) ? x[e] : 1.0 - x[e];
    }
    if (weight == 0.0) continue;
    total += weight * f.Eval(SubsetMask::FromBits(n, s));
  }
  return total;
}

double ExpectedMarginalExact(const SetFunction& f, const FractionalPoint& x,
                             int e) {
  FractionalPoint raised = x;
  raised.set(e, 1.0);
  return MultilinearExact(f, raised) - MultilinearExact(f, x);
}

std::vector<double> MultilinearGradientExact(const SetFunction& f,
                                             const FractionalPoint& x) {
  std::vector<double> grad(x.size());
  for (int e = 0; e < x.size(); ++e) {
    FractionalPoint up = x;
    FractionalPoint down = x;
    up.set(e, 1.0);
    down.set(e, 0.0);
    grad[e] = MultilinearExact(f, up) - MultilinearExact(f, down);
  }
  return grad;
}

double LovaszExact(const SetFunction& f, const FractionalPoint& x) {
  RequireSameSize(f, x);
  const int n = f.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });
  // lambda in (x_(1), 1] gives the empty set; lambda in (x_(i+1), x_(i)]
  // gives the top-i elements.
  SubsetMask threshold_set(n);
  double upper = 1.0;
  double total = 0.0;
  const double top = n > 0 ? x[order[0]] : 0.0;
  if (upper > top) total += (upper - top) * f.Eval(threshold_set);
  for (int i = 0; i < n; ++i) {
    threshold_set.Insert(order[i]);
    const double hi = x[order[i]];
    const double lo = i + 1 < n ? x[order[i + 1]] : 0.0;
    if (hi > lo) total += (hi - lo) * f.Eval(threshold_set);
  }
  return total;
}

}  // namespace regsub
