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

#include "regsub/matroid.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "regsub/errors.h"
#include "regsub/set_function.h"

namespace regsub {

FractionalPoint::FractionalPoint(std::vector<double> x) : x_(std::move(x)) {
  for (size_t e = 0; e < x_.size(); ++e) {
    if (!(x_[e] >= 0.0 && x_[e] <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "coordinate " + std::to_string(e) + " = " +
                      std::to_string(x_[e]) + " outside [0,1]");
    }
  }
}

FractionalPoint FractionalPoint::Indicator(const SubsetMask& s) {
  FractionalPoint out(s.universe_size());
  for (int e : s.Elements()) out.x_[e] = 1.0;
  return out;
}

FractionalPoint FractionalPoint::Join(const FractionalPoint& other) const {
  FractionalPoint out = *this;
  for (int e = 0; e < size(); ++e) out.x_[e] = std::max(x_[e], other.x_[e]);
  return out;
}

FractionalPoint FractionalPoint::Meet(const FractionalPoint& other) const {
  FractionalPoint out = *this;
  for (int e = 0; e < size(); ++e) out.x_[e] = std::min(x_[e], other.x_[e]);
  return out;
}

FractionalPoint FractionalPoint::Hadamard(const FractionalPoint& other) const {
  FractionalPoint out = *this;
  for (int e = 0; e < size(); ++e) out.x_[e] = x_[e] * other.x_[e];
  return out;
}

FractionalPoint FractionalPoint::Complement() const {
  FractionalPoint out = *this;
  for (double& v : out.x_) v = 1.0 - v;
  return out;
}

double FractionalPoint::Sum() const {
  return std::accumulate(x_.begin(), x_.end(), 0.0);
}

bool FractionalPoint::Dominated(const FractionalPoint& other) const {
  for (int e = 0; e < size(); ++e) {
    if (x_[e] > other.x_[e]) return false;
  }
  return true;
}

Matroid Matroid::Uniform(int n, int k) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (k < 0) throw Error(ErrorCode::kInvalidK, "uniform matroid needs k >= 0");
  Matroid m;
  m.kind_ = MatroidKind::kUniform;
  m.n_ = n;
  m.k_ = k;
  return m;
}

Matroid Matroid::Partition(int n, std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (blocks.size() != capacities.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition needs one capacity per block");
  }
  std::vector<int> block_of(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (capacities[b] < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative block capacity");
    }
    for (int e : blocks[b]) {
      if (e < 0 || e >= n) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "block element " + std::to_string(e) + " out of range");
      }
      if (block_of[e] != -1) {
        throw Error(ErrorCode::kInvalidArgument,
                    "element " + std::to_string(e) + " in two blocks");
      }
      block_of[e] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < n; ++e) {
    if (block_of[e] == -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element " + std::to_string(e) + " not in any block");
    }
  }
  Matroid m;
  m.kind_ = MatroidKind::kPartition;
  m.n_ = n;
  m.blocks_ = std::move(blocks);
  m.capacities_ = std::move(capacities);
  m.block_of_ = std::move(block_of);
  return m;
}

Matroid Matroid::Explicit(
    int n, const std::function<bool(const SubsetMask&)>& indep) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (n > kMaxEnumerableN) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "explicit matroids are limited to n <= 20");
  }
  const uint64_t count = uint64_t{1} << n;
  std::vector<char> independent(count);
  for (uint64_t s = 0; s < count; ++s) {
    independent[s] = indep(SubsetMask::FromBits(n, s)) ? 1 : 0;
  }
  if (!independent[0]) {
    throw Error(ErrorCode::kNotAMatroid, "empty set is not independent");
  }
  // Subsets are visited in increasing numeric order, so every S - e is
  // ranked before S.
  std::vector<int> rank(count, 0);
  for (uint64_t s = 1; s < count; ++s) {
    const int size = std::popcount(s);
    if (independent[s]) {
      for (uint64_t bits = s; bits != 0; bits &= bits - 1) {
        const uint64_t smaller = s & ~(bits & -bits);
        if (!independent[smaller]) {
          throw Error(ErrorCode::kNotAMatroid,
                      "not hereditary at " +
                          SubsetMask::FromBits(n, s).ToString());
        }
      }
      rank[s] = size;
      continue;
    }
    int best = 0;
    for (uint64_t bits = s; bits != 0; bits &= bits - 1) {
      best = std::max(best, rank[s & ~(bits & -bits)]);
    }
    rank[s] = best;
  }
  // For a hereditary family, the exchange axiom holds iff the rank function
  // is submodular; the local four-point form suffices.
  for (uint64_t s = 0; s < count; ++s) {
    for (int a = 0; a < n; ++a) {
      const uint64_t bit_a = uint64_t{1} << a;
      if (s & bit_a) continue;
      for (int b = a + 1; b < n; ++b) {
        const uint64_t bit_b = uint64_t{1} << b;
        if (s & bit_b) continue;
        if (rank[s | bit_a] + rank[s | bit_b] <
            rank[s | bit_a | bit_b] + rank[s]) {
          throw Error(ErrorCode::kNotAMatroid,
                      "exchange axiom fails near " +
                          SubsetMask::FromBits(n, s).ToString());
        }
      }
    }
  }
  Matroid m;
  m.kind_ = MatroidKind::kExplicit;
  m.n_ = n;
  m.rank_table_ = std::make_shared<const std::vector<int>>(std::move(rank));
  return m;
}

bool Matroid::IsIndependent(const SubsetMask& a) const {
  if (a.universe_size() != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "subset/matroid size mismatch");
  }
  switch (kind_) {
    case MatroidKind::kUniform:
      return a.Count() <= k_;
    case MatroidKind::kPartition: {
      std::vector<int> used(blocks_.size(), 0);
      for (int e : a.Elements()) {
        if (++used[block_of_[e]] > capacities_[block_of_[e]]) return false;
      }
      return true;
    }
    case MatroidKind::kExplicit:
      return (*rank_table_)[a.LowBits()] == a.Count();
  }
  return false;
}

int Matroid::Rank(const SubsetMask& a) const {
  if (a.universe_size() != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "subset/matroid size mismatch");
  }
  switch (kind_) {
    case MatroidKind::kUniform:
      return std::min(k_, a.Count());
    case MatroidKind::kPartition: {
      std::vector<int> used(blocks_.size(), 0);
      for (int e : a.Elements()) ++used[block_of_[e]];
      int total = 0;
      for (size_t b = 0; b < blocks_.size(); ++b) {
        total += std::min(used[b], capacities_[b]);
      }
      return total;
    }
    case MatroidKind::kExplicit:
      return (*rank_table_)[a.LowBits()];
  }
  return 0;
}

Matroid::LinearMaximum Matroid::LinearMaximize(
    std::span<const double> c) const {
  if (static_cast<int>(c.size()) != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "weight/matroid size mismatch");
  }
  std::vector<int> order;
  for (int e = 0; e < n_; ++e) {
    if (c[e] > 0.0) order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c[a] > c[b]; });
  LinearMaximum best{SubsetMask(n_), FractionalPoint(n_), 0.0};
  for (int e : order) {
    SubsetMask candidate = best.set.With(e);
    if (IsIndependent(candidate)) {
      best.set = std::move(candidate);
      best.vertex.set(e, 1.0);
      best.value += c[e];
    }
  }
  return best;
}

bool Matroid::InPolytope(const FractionalPoint& x, double tol) const {
  if (x.size() != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "point/matroid size mismatch");
  }
  for (int e = 0; e < n_; ++e) {
    if (x[e] < -tol || x[e] > 1.0 + tol) return false;
  }
  switch (kind_) {
    case MatroidKind::kUniform:
      return x.Sum() <= k_ + tol;
    case MatroidKind::kPartition: {
      for (size_t b = 0; b < blocks_.size(); ++b) {
        double sum = 0.0;
        for (int e : blocks_[b]) sum += x[e];
        if (sum > capacities_[b] + tol) return false;
      }
      return true;
    }
    case MatroidKind::kExplicit: {
      const uint64_t count = uint64_t{1} << n_;
      for (uint64_t s = 1; s < count; ++s) {
        double sum = 0.0;
        for (uint64_t bits = s; bits != 0; bits &= bits - 1) {
          sum += x[std::countr_zero(bits)];
        }
        if (sum > (*rank_table_)[s] + tol) return false;
      }
      return true;
    }
  }
  return false;
}

bool operator==(const Matroid& a, const Matroid& b) {
  if (a.kind_ != b.kind_ || a.n_ != b.n_) return false;
  switch (a.kind_) {
    case MatroidKind::kUniform:
      return a.k_ == b.k_;
    case MatroidKind::kPartition:
      return a.blocks_ == b.blocks_ && a.capacities_ == b.capacities_;
    case MatroidKind::kExplicit:
      return *a.rank_table_ == *b.rank_table_;
  }
  return false;
}

}  // namespace regsub
