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

#ifndef REGSUB_TESTS_TEST_UTIL_H_
#define REGSUB_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <vector>

#include "regsub/set_function.h"
#include "regsub/subset_mask.h"

namespace regsub::testing {

// a -> b (2), b -> c (1), c -> a (3).
inline std::vector<WeightedEdge> TriangleEdges() {
  return {{0, 1, 2.0}, {1, 2, 1.0}, {2, 0, 3.0}};
}

inline SetFunction TriangleCut() {
  return SetFunction::DirectedCut(3, TriangleEdges());
}

// Cut value from a dense weight matrix; deliberately shares no code with the
// library's edge-list evaluator.
class CutOracle {
 public:
  CutOracle(int n, const std::vector<WeightedEdge>& edges)
      : n_(n), w_(n * n, 0.0) {
    for (const WeightedEdge& e : edges) w_[e.from * n + e.to] += e.weight;
  }

  double operator()(uint64_t bits) const {
    double total = 0.0;
    for (int u = 0; u < n_; ++u) {
      if (!((bits >> u) & 1U)) continue;
      for (int v = 0; v < n_; ++v) {
        if ((bits >> v) & 1U) continue;
        total += w_[u * n_ + v];
      }
    }
    return total;
  }

  // Sum of f(S) * P[R_x = S] by direct enumeration.
  double Multilinear(const std::vector<double>& x) const {
    double total = 0.0;
    for (uint64_t s = 0; s < (uint64_t{1} << n_); ++s) {
      double p = 1.0;
      for (int e = 0; e < n_; ++e) p *= ((s >> e) & 1U) ? x[e] : 1.0 - x[e];
      total += p * (*this)(s);
    }
    return total;
  }

  int n() const { return n_; }

 private:
  int n_;
  std::vector<double> w_;
};

inline std::vector<WeightedEdge> RandomEdges(std::mt19937_64& rng, int n,
                                             double density) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && unit(rng) < density) {
        edges.push_back({u, v, 0.05 + unit(rng)});
      }
    }
  }
  return edges;
}

inline SetFunction RandomCoverage(std::mt19937_64& rng, int n, int items) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(items);
  for (double& w : weights) w = unit(rng);
  std::vector<std::vector<int>> covers(n);
  for (auto& cover : covers) {
    for (int item = 0; item < items; ++item) {
      if (unit(rng) < 0.35) cover.push_back(item);
    }
  }
  return SetFunction::WeightedCoverage(std::move(weights), std::move(covers));
}

// Cut plus coverage, tabulated: a non-monotone submodular explicit table.
inline std::vector<double> RandomSubmodularTable(std::mt19937_64& rng, int n) {
  const SetFunction cut =
      SetFunction::DirectedCut(n, RandomEdges(rng, n, 0.5));
  const SetFunction cov = RandomCoverage(rng, n, 2 * n);
  std::vector<double> table(uint64_t{1} << n);
  for (uint64_t s = 0; s < table.size(); ++s) {
    const SubsetMask mask = SubsetMask::FromBits(n, s);
    table[s] = cut.Eval(mask) + cov.Eval(mask);
  }
  return table;
}

inline std::vector<double> RandomPoint(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = unit(rng);
  return x;
}

}  // namespace regsub::testing

#endif  // REGSUB_TESTS_TEST_UTIL_H_
