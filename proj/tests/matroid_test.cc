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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "regsub/errors.h"

namespace regsub {
namespace {

SubsetMask Set(int n, std::vector<int> elements) {
  return SubsetMask::FromElements(n, elements);
}

// Largest independent subset of `a`, by exhaustive search.
int OracleRank(const Matroid& m, uint64_t a) {
  int best = 0;
  for (uint64_t s = a;; s = (s - 1) & a) {
    if (m.IsIndependent(SubsetMask::FromBits(m.n(), s))) {
      best = std::max(best, std::popcount(s));
    }
    if (s == 0) break;
  }
  return best;
}

// max <c, 1_S> over independent S, by exhaustive search.
double OracleLinearMax(const Matroid& m, const std::vector<double>& c) {
  double best = 0.0;
  for (uint64_t s = 0; s < (uint64_t{1} << m.n()); ++s) {
    if (!m.IsIndependent(SubsetMask::FromBits(m.n(), s))) continue;
    double value = 0.0;
    for (int e = 0; e < m.n(); ++e) {
      if ((s >> e) & 1U) value += c[e];
    }
    best = std::max(best, value);
  }
  return best;
}

std::vector<Matroid> SampleMatroids() {
  return {Matroid::Uniform(5, 2), Matroid::Uniform(4, 4),
          Matroid::Partition(6, {{0, 3}, {1, 2, 5}, {4}}, {1, 2, 0}),
          Matroid::Explicit(4, [](const SubsetMask& s) {
            // Graphic matroid of a triangle 0-1-2 plus a pendant edge 3.
            return !(s.Contains(0) && s.Contains(1) && s.Contains(2));
          })};
}

TEST(MatroidTest, Independence) {
  EXPECT_FALSE(Matroid::Uniform(4, 2).IsIndependent(Set(4, {0, 1, 2})));
  const Matroid partition = Matroid::Partition(4, {{0, 1}, {2, 3}}, {1, 1});
  EXPECT_TRUE(partition.IsIndependent(Set(4, {0, 2})));
  EXPECT_FALSE(partition.IsIndependent(Set(4, {0, 1})));
  for (const Matroid& m : SampleMatroids()) {
    EXPECT_TRUE(m.IsIndependent(SubsetMask(m.n())));
  }
}

TEST(MatroidTest, Rank) {
  EXPECT_EQ(Matroid::Uniform(5, 3).Rank(SubsetMask::Full(5)), 3);
  EXPECT_EQ(Matroid::Uniform(2, 7).Rank(SubsetMask::Full(2)), 2);
  const Matroid partition = Matroid::Partition(4, {{0, 1}, {2, 3}}, {1, 1});
  EXPECT_EQ(partition.Rank(Set(4, {0, 1})), 1);

  const Matroid uniform_one = Matroid::Explicit(
      2, [](const SubsetMask& s) { return s.Count() <= 1; });
  EXPECT_EQ(OracleRank(uniform_one, 0b11), 1);
  EXPECT_EQ(uniform_one.Rank(Set(2, {0, 1})), 1);

  for (const Matroid& m : SampleMatroids()) {
    for (uint64_t a = 0; a < (uint64_t{1} << m.n()); ++a) {
      EXPECT_EQ(m.Rank(SubsetMask::FromBits(m.n(), a)), OracleRank(m, a));
    }
  }
}

TEST(MatroidTest, LinearMaximizeExamples) {
  const auto uniform = Matroid::Uniform(3, 2).LinearMaximize(
      std::vector<double>{3.0, -1.0, 2.0});
  EXPECT_EQ(uniform.set, Set(3, {0, 2}));
  EXPECT_DOUBLE_EQ(uniform.value, 5.0);
  EXPECT_DOUBLE_EQ(OracleLinearMax(Matroid::Uniform(3, 2), {3.0, -1.0, 2.0}),
                   5.0);

  const auto none = Matroid::Uniform(3, 2).LinearMaximize(
      std::vector<double>{-1.0, 0.0, -2.0});
  EXPECT_TRUE(none.set.Empty());
  EXPECT_DOUBLE_EQ(none.vertex.Sum(), 0.0);

  const Matroid partition = Matroid::Partition(3, {{0, 1}, {2}}, {1, 1});
  const auto best =
      partition.LinearMaximize(std::vector<double>{2.0, 5.0, 1.0});
  EXPECT_EQ(best.set, Set(3, {1, 2}));
  EXPECT_DOUBLE_EQ(best.value, 6.0);
  EXPECT_DOUBLE_EQ(OracleLinearMax(partition, {2.0, 5.0, 1.0}), 6.0);
}

TEST(MatroidTest, LinearMaximizeMatchesEnumeration) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (const Matroid& m : SampleMatroids()) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> c(m.n());
      for (double& v : c) v = normal(rng);
      const auto result = m.LinearMaximize(c);
      EXPECT_TRUE(m.IsIndependent(result.set));
      EXPECT_NEAR(result.value, OracleLinearMax(m, c), 1e-12);
      EXPECT_EQ(result.vertex, FractionalPoint::Indicator(result.set));
    }
  }
}

TEST(MatroidTest, PolytopeMembership) {
  const Matroid one = Matroid::Uniform(2, 1);
  EXPECT_TRUE(one.InPolytope(FractionalPoint({0.5, 0.5})));
  EXPECT_FALSE(one.InPolytope(FractionalPoint({0.9, 0.9}), 1e-9));

  const Matroid partition = Matroid::Partition(4, {{0, 1}, {2, 3}}, {1, 2});
  EXPECT_FALSE(partition.InPolytope(FractionalPoint({0.6, 0.6, 1.0, 1.0})));
  EXPECT_TRUE(partition.InPolytope(FractionalPoint({0.4, 0.6, 1.0, 1.0})));
}

TEST(MatroidTest, ConvexCombinationsOfIndependentSetsAreInPolytope) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const Matroid& m : SampleMatroids()) {
    if (m.kind() == MatroidKind::kExplicit) continue;
    std::vector<uint64_t> independent;
    for (uint64_t s = 0; s < (uint64_t{1} << m.n()); ++s) {
      if (m.IsIndependent(SubsetMask::FromBits(m.n(), s))) {
        independent.push_back(s);
      }
    }
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> lambda(independent.size());
      double total = 0.0;
      for (double& l : lambda) total += (l = unit(rng));
      std::vector<double> x(m.n(), 0.0);
      for (size_t j = 0; j < independent.size(); ++j) {
        for (int e = 0; e < m.n(); ++e) {
          if ((independent[j] >> e) & 1U) x[e] += lambda[j] / total;
        }
      }
      for (double& v : x) v = std::min(v, 1.0);
      EXPECT_TRUE(m.InPolytope(FractionalPoint(x)));
    }
  }
}

TEST(MatroidTest, RejectsInvalidConstructions) {
  EXPECT_THROW(Matroid::Uniform(3, -1), Error);
  EXPECT_THROW(Matroid::Partition(3, {{0, 1}, {1, 2}}, {1, 1}), Error);
  EXPECT_THROW(Matroid::Partition(3, {{0, 1}}, {1}), Error);
  EXPECT_THROW(Matroid::Partition(2, {{0, 1}}, {1, 1}), Error);
  try {
    // Not hereditary: {0,1} independent but {1} dependent.
    Matroid::Explicit(2, [](const SubsetMask& s) {
      return s.Empty() || s.Count() == 2 || s.Contains(0);
    });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAMatroid);
  }
  try {
    // Hereditary but violates exchange: {0,1} and {2} maximal.
    Matroid::Explicit(3, [](const SubsetMask& s) {
      return s.Count() <= 1 || s == Set(3, {0, 1});
    });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAMatroid);
  }
}

TEST(FractionalPointTest, Operations) {
  const FractionalPoint x({0.2, 0.8});
  const FractionalPoint y({0.5, 0.5});
  EXPECT_EQ(x.Join(y), FractionalPoint({0.5, 0.8}));
  EXPECT_EQ(x.Meet(y), FractionalPoint({0.2, 0.5}));
  EXPECT_DOUBLE_EQ(x.Hadamard(y)[1], 0.4);
  EXPECT_DOUBLE_EQ(x.Complement()[0], 0.8);
  EXPECT_TRUE(x.Meet(y).Dominated(x));
  EXPECT_THROW(FractionalPoint(std::vector<double>{1.5}), Error);
}

}  // namespace
}  // namespace regsub
