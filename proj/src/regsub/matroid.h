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

#ifndef REGSUB_MATROID_H_
#define REGSUB_MATROID_H_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "regsub/subset_mask.h"

namespace regsub {

inline constexpr double kPolytopeTolerance = 1e-9;

// A point of [0,1]^n.
class FractionalPoint {
 public:
  FractionalPoint() = default;
  explicit FractionalPoint(int n) : x_(n, 0.0) {}
  // Throws invalid_argument unless every coordinate lies in [0, 1].
  explicit FractionalPoint(std::vector<double> x);

  static FractionalPoint Indicator(const SubsetMask& s);

  int size() const { return static_cast<int>(x_.size()); }
  double operator[](int e) const { return x_[e]; }
  // Caller keeps the value in [0, 1].
  void set(int e, double value) { x_[e] = value; }
  std::span<const double> values() const { return x_; }

  // Coordinate-wise max, min and product.
  FractionalPoint Join(const FractionalPoint& other) const;
  FractionalPoint Meet(const FractionalPoint& other) const;
  FractionalPoint Hadamard(const FractionalPoint& other) const;
  // 1 - x.
  FractionalPoint Complement() const;

  double Sum() const;
  // x <= other coordinate-wise.
  bool Dominated(const FractionalPoint& other) const;

  friend bool operator==(const FractionalPoint&,
                         const FractionalPoint&) = default;

 private:
  std::vector<double> x_;
};

enum class MatroidKind { kUniform, kPartition, kExplicit };

class Matroid {
 public:
  static Matroid Uniform(int n, int k);
  // Blocks must be disjoint and cover {0, ..., n-1}.
  static Matroid Partition(int n, std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities);
  // Independence predicate is tabulated over all 2^n subsets and the matroid
  // axioms are verified; n <= 20.
  static Matroid Explicit(int n,
                          const std::function<bool(const SubsetMask&)>& indep);

  MatroidKind kind() const { return kind_; }
  int n() const { return n_; }
  int uniform_k() const { return k_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

  bool IsIndependent(const SubsetMask& a) const;
  int Rank(const SubsetMask& a) const;

  struct LinearMaximum {
    SubsetMask set;
    FractionalPoint vertex;
    double value = 0.0;
  };
  // argmax of <c, v> over the matroid polytope: greedy over positive
  // coordinates in non-increasing order, lower index first on ties.
  LinearMaximum LinearMaximize(std::span<const double> c) const;

  bool InPolytope(const FractionalPoint& x,
                  double tol = kPolytopeTolerance) const;

  // Structural equality; explicit matroids compare their tables.
  friend bool operator==(const Matroid& a, const Matroid& b);

 private:
  Matroid() = default;

  MatroidKind kind_ = MatroidKind::kUniform;
  int n_ = 0;
  int k_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
  // Explicit kind: rank of every subset, indexed by its bits. A subset is
  // independent iff its rank equals its size.
  std::shared_ptr<const std::vector<int>> rank_table_;
};

}  // namespace regsub

#endif  // REGSUB_MATROID_H_
