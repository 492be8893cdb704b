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
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "regsub/errors.h"
#include "test_util.h"

namespace regsub {
namespace {

using testing::CutOracle;

TEST(SampleRandomSubsetTest, DegenerateAndHalfPoints) {
  RngStream rng(1);
  const SubsetMask s = SubsetMask::FromElements(4, std::vector<int>{1, 3});
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(SampleRandomSubset(FractionalPoint::Indicator(s), rng), s);
    EXPECT_TRUE(SampleRandomSubset(FractionalPoint(4), rng).Empty());
  }
  const int n = 5;
  const int draws = 100000;
  std::vector<int> hits(n, 0);
  const FractionalPoint half(std::vector<double>(n, 0.5));
  for (int i = 0; i < draws; ++i) {
    for (int e : SampleRandomSubset(half, rng).Elements()) ++hits[e];
  }
  for (int e = 0; e < n; ++e) {
    EXPECT_NEAR(hits[e] / static_cast<double>(draws), 0.5, 0.01);
  }
}

TEST(EstimateMarginalWeightsTest, ExactAtVertices) {
  const SetFunction g = testing::TriangleCut();
  const CutOracle oracle(3, testing::TriangleEdges());
  const auto at_zero =
      EstimateMarginalWeights(g, FractionalPoint(3), 7, RngStream(2));
  for (int e = 0; e < 3; ++e) {
    EXPECT_DOUBLE_EQ(at_zero.w[e], oracle(uint64_t{1} << e) - oracle(0));
  }
  const auto at_one = EstimateMarginalWeights(
      g, FractionalPoint(std::vector<double>(3, 1.0)), 7, RngStream(2));
  for (double w : at_one.w) EXPECT_DOUBLE_EQ(w, 0.0);
  EXPECT_EQ(at_one.queries_spent, 2u * 3 * 7);
}

TEST(EstimateMarginalWeightsTest, TriangleHalfPoint) {
  // E[g(a | R)] over the 8 equally likely R, with the dense-matrix oracle.
  const CutOracle oracle(3, testing::TriangleEdges());
  double expected = 0.0;
  for (uint64_t r = 0; r < 8; ++r) expected += oracle(r | 1U) - oracle(r);
  expected /= 8.0;
  EXPECT_DOUBLE_EQ(expected, -0.25);

  const SetFunction g = testing::TriangleCut();
  g.ResetQueries();
  const auto estimate = EstimateMarginalWeights(
      g, FractionalPoint({0.5, 0.5, 0.5}), 100000, RngStream(3));
  EXPECT_NEAR(estimate.w[0], expected, 0.05);
  EXPECT_EQ(estimate.queries_spent, 2u * 3 * 100000);
  EXPECT_EQ(g.queries(), estimate.queries_spent);
}

TEST(EstimateMarginalWeightsTest, DeterministicPerStream) {
  const SetFunction g = testing::TriangleCut();
  const FractionalPoint y({0.3, 0.6, 0.9});
  const auto a = EstimateMarginalWeights(g, y, 50, RngStream(9));
  const auto b = EstimateMarginalWeights(g, y, 50, RngStream(9));
  EXPECT_EQ(a.w, b.w);
}

TEST(MultilinearExactTest, Basics) {
  const SetFunction g = testing::TriangleCut();
  const CutOracle oracle(3, testing::TriangleEdges());
  EXPECT_DOUBLE_EQ(oracle(0b011), 1.0);
  EXPECT_DOUBLE_EQ(MultilinearExact(g, FractionalPoint({1.0, 1.0, 0.0})), 1.0);
  for (uint64_t s = 0; s < 8; ++s) {
    const SubsetMask mask = SubsetMask::FromBits(3, s);
    EXPECT_DOUBLE_EQ(MultilinearExact(g, FractionalPoint::Indicator(mask)),
                     oracle(s));
  }
  const SetFunction modular = SetFunction::Modular({0.5, 2.0, 1.0});
  EXPECT_NEAR(MultilinearExact(modular, FractionalPoint({0.2, 0.4, 0.9})),
              0.1 + 0.8 + 0.9, 1e-12);
}

TEST(MultilinearExactTest, MatchesOracleOnRandomPoints) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 10;
    const auto edges = testing::RandomEdges(rng, n, 0.5);
    const CutOracle oracle(n, edges);
    const SetFunction g = SetFunction::DirectedCut(n, edges);
    const auto x = testing::RandomPoint(rng, n);
    EXPECT_NEAR(MultilinearExact(g, FractionalPoint(x)), oracle.Multilinear(x),
                1e-10);
  }
}

TEST(MultilinearExactTest, GradientAndExpectedMarginal) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const auto edges = testing::RandomEdges(rng, n, 0.5);
    const CutOracle oracle(n, edges);
    const SetFunction g = SetFunction::DirectedCut(n, edges);
    const auto x = testing::RandomPoint(rng, n);
    const auto grad = MultilinearGradientExact(g, FractionalPoint(x));
    for (int e = 0; e < n; ++e) {
      auto up = x;
      auto down = x;
      up[e] = 1.0;
      down[e] = 0.0;
      const double expected = oracle.Multilinear(up) - oracle.Multilinear(down);
      EXPECT_NEAR(grad[e], expected, 1e-10);
      EXPECT_NEAR(ExpectedMarginalExact(g, FractionalPoint(x), e),
                  oracle.Multilinear(up) - oracle.Multilinear(x), 1e-10);
    }
  }
}

TEST(LovaszExactTest, Basics) {
  const SetFunction g = testing::TriangleCut();
  const SubsetMask s = SubsetMask::FromElements(3, std::vector<int>{2});
  EXPECT_DOUBLE_EQ(LovaszExact(g, FractionalPoint::Indicator(s)), 3.0);
  EXPECT_DOUBLE_EQ(LovaszExact(g, FractionalPoint(3)), 0.0);
  // Thresholds 0.7 and 0.2: 0.2 g({a,c}) + 0.5 g({c}) + 0.3 g(empty).
  EXPECT_NEAR(LovaszExact(g, FractionalPoint({0.2, 0.0, 0.7})),
              0.2 * 2.0 + 0.5 * 3.0, 1e-12);
}

TEST(LovaszExactTest, BelowMultilinear) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    const SetFunction g =
        SetFunction::DirectedCut(n, testing::RandomEdges(rng, n, 0.5));
    const FractionalPoint x(testing::RandomPoint(rng, n));
    EXPECT_GE(MultilinearExact(g, x), LovaszExact(g, x) - 1e-9);
  }
}

TEST(ExtensionsTest, SizeGuard) {
  const SetFunction g = SetFunction::Modular(std::vector<double>(21, 1.0));
  try {
    MultilinearExact(g, FractionalPoint(21));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroundSetTooLarge);
  }
}

}  // namespace
}  // namespace regsub
