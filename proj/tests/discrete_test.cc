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

#include "regsub/discrete.h"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "regsub/errors.h"
#include "regsub/exact.h"
#include "test_util.h"

namespace regsub {
namespace {

SubsetMask Set(int n, std::vector<int> elements) {
  return SubsetMask::FromElements(n, elements);
}

class TriangleDiscreteTest : public ::testing::Test {
 protected:
  const SetFunction g_ = testing::TriangleCut();
  const ModularCost ell_{{0.5, 0.5, 0.5}};
};

TEST_F(TriangleDiscreteTest, DistortedGain) {
  // 0.5 * g(c | {}) - 0.5 with g(c | {}) = 3.
  EXPECT_DOUBLE_EQ(DistortedGain(g_, ell_, 2, 0, SubsetMask(3), 2), 1.0);
  // Last iteration: plain marginal minus cost; g(b | {a}) = 1 - 2.
  EXPECT_DOUBLE_EQ(DistortedGain(g_, ell_, 2, 1, Set(3, {0}), 1), -1.5);
  EXPECT_DOUBLE_EQ(DistortedGain(g_, ell_, 2, 0, Set(3, {1}), 1), -0.5);
}

TEST_F(TriangleDiscreteTest, CandidateSelection) {
  const DistortionSchedule schedule(2);
  EXPECT_DOUBLE_EQ(DistortedGain(g_, ell_, schedule, 0, SubsetMask(3), 0), 0.5);
  EXPECT_DOUBLE_EQ(DistortedGain(g_, ell_, schedule, 0, SubsetMask(3), 1), 0.0);
  EXPECT_EQ(SelectCandidates(g_, ell_, schedule, 0, SubsetMask(3)),
            (std::vector<int>{2, 0}));

  const ModularCost expensive({10.0, 10.0, 10.0});
  EXPECT_TRUE(SelectCandidates(g_, expensive, schedule, 0, SubsetMask(3))
                  .empty());
  const ModularCost one_cheap({10.0, 10.0, 0.0});
  EXPECT_EQ(SelectCandidates(g_, one_cheap, schedule, 0, SubsetMask(3)),
            (std::vector<int>{2}));
}

TEST_F(TriangleDiscreteTest, RandomGreedyMeetsBound) {
  const OptResult opt = BruteForceOpt(g_, ell_, CardinalityAtMost{2});
  EXPECT_EQ(opt.set, Set(3, {2}));
  const double bound = GuaranteeBound(BoundForm::kCardinalityRandomGreedy,
                                      opt.g_value, opt.ell_value, {.k = 2});
  EXPECT_DOUBLE_EQ(bound, 1.0);
  const Expectation result = EmpiricalExpectation(
      [&](const RngStream& rng) {
        const DiscreteResult run = RunDistortedRandomGreedy(g_, ell_, 2, rng);
        EXPECT_LE(run.set.Count(), 2);
        EXPECT_LE(run.g_queries, 2u * 3 * 2);
        return g_.Eval(run.set) - ell_(run.set);
      },
      100000, 13);
  EXPECT_GE(result.mean, bound - 3 * result.std_error);
}

TEST_F(TriangleDiscreteTest, UnconstrainedMeetsBound) {
  const OptResult opt = BruteForceOpt(g_, ell_, Unconstrained{});
  const double bound = GuaranteeBound(BoundForm::kUnconstrained, opt.g_value,
                                      opt.ell_value, {.n = 3});
  EXPECT_NEAR(bound, 4.0 / 9.0 * 3.0 - 0.5, 1e-12);
  const Expectation result = EmpiricalExpectation(
      [&](const RngStream& rng) {
        const DiscreteResult run = RunUnconstrainedDistortedGreedy(g_, ell_, rng);
        return g_.Eval(run.set) - ell_(run.set);
      },
      100000, 14);
  EXPECT_GE(result.mean, bound - 3 * result.std_error);
}

TEST(DiscreteTest, ZeroFunctionYieldsEmptySet) {
  const SetFunction zero = SetFunction::Modular({0.0, 0.0, 0.0, 0.0});
  const ModularCost ell({0.1, 0.2, 0.3, 0.4});
  for (uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(RunDistortedRandomGreedy(zero, ell, 3, RngStream(seed))
                    .set.Empty());
    EXPECT_TRUE(
        RunUnconstrainedDistortedGreedy(zero, ell, RngStream(seed)).set.Empty());
  }
}

TEST(DiscreteTest, SingleElementForcedBranch) {
  const SetFunction g = SetFunction::Modular({2.0});
  const ModularCost ell({1.0});
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const DiscreteResult run = RunDistortedRandomGreedy(g, ell, 1, RngStream(seed));
    EXPECT_EQ(run.set, SubsetMask::Full(1));
    EXPECT_EQ(run.algorithm, Algorithm::kSingletonScan);
  }
}

TEST(DiscreteTest, UnconstrainedAcceptsPositiveGains) {
  // Monotone coverage, zero costs: every drawn element that covers something
  // new is kept.
  const SetFunction g =
      SetFunction::WeightedCoverage({1.0, 1.0, 1.0}, {{0}, {1}, {2}, {}});
  const ModularCost ell = ModularCost::Zero(4);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const DiscreteResult run = RunUnconstrainedDistortedGreedy(
        g, ell, RngStream(seed), {.record_trace = true});
    for (const DiscreteStep& step : run.trace) {
      const bool positive =
          !step.before.Contains(step.element) && step.element != 3;
      EXPECT_EQ(step.added, positive);
    }
  }
}

TEST(DiscreteTest, SingletonScan) {
  const SetFunction g = testing::TriangleCut();
  const ModularCost ell({0.5, 0.5, 0.5});
  g.ResetQueries();
  const DiscreteResult run = RunSingletonScan(g, ell);
  EXPECT_EQ(run.set, Set(3, {2}));
  EXPECT_EQ(run.g_queries, 4u);
}

TEST(DeltaStarTest, FixedPointAndBrackets) {
  EXPECT_NEAR(DeltaStarAlpha(1.0), 8.0 * std::log(2.0), 1e-12);
  for (int k : {2, 5, 6, 10, 101, 120, 200, 1000}) {
    const double x = SolveDeltaStar(k);
    EXPECT_GT(x, 0.0);
    EXPECT_LT(x, 2.0);
    EXPECT_LE(DeltaStarAlpha(x + 1e-12), k);
    EXPECT_GE(DeltaStarAlpha(std::max(x - 1e-12, 1e-300)), k);
  }
  EXPECT_LT(SolveDeltaStar(6), 1.0);
  EXPECT_GT(SolveDeltaStar(5), 1.0);
  // alpha(0.8356) = 8 / 0.69823 * ln(2.39349) = 10.000.
  EXPECT_NEAR(SolveDeltaStar(10), 0.8356, 1e-4);
  EXPECT_GT(SolveDeltaStar(10), std::exp(-1.0));
  EXPECT_LT(SolveDeltaStar(101), std::exp(-1.0));
  EXPECT_GT(SolveDeltaStar(100), std::exp(-1.0));
  for (int k = 2; k < 300; ++k) {
    EXPECT_GT(SolveDeltaStar(k), SolveDeltaStar(k + 1));
  }
  EXPECT_THROW(SolveDeltaStar(1), Error);
}

TEST(DispatcherTest, SelectsByDeltaStar) {
  EXPECT_EQ(SelectCardinalityAlgorithm(10, 0.3), Algorithm::kRandomGreedy);
  EXPECT_EQ(SelectCardinalityAlgorithm(200, 0.3), Algorithm::kSamplingGreedy);
  EXPECT_EQ(SelectCardinalityAlgorithm(1, 0.3), Algorithm::kSingletonScan);
}

TEST(SamplingTest, Parameters) {
  const SamplingParams params = ComputeSamplingParams(400, 120, 0.35);
  const double p = 8.0 / (120 * 0.35 * 0.35) * std::log(2.0 / 0.35);
  EXPECT_NEAR(params.p, p, 1e-12);
  EXPECT_EQ(params.sample_size, static_cast<int>(std::ceil(p * 400)));
  EXPECT_NEAR(params.s, 120.0 / 400 * params.sample_size, 1e-12);
}

TEST(SamplingTest, RankLaw) {
  RngStream rng(7);
  const double s = 2.5;
  std::vector<int> counts(4, 0);
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) {
    const int j = DrawRank(s, rng);
    ASSERT_GE(j, 1);
    ASSERT_LE(j, 3);
    ++counts[j];
  }
  EXPECT_NEAR(counts[1] / static_cast<double>(draws), 1.0 / s, 0.003);
  EXPECT_NEAR(counts[2] / static_cast<double>(draws), 1.0 / s, 0.003);
  EXPECT_NEAR(counts[3] / static_cast<double>(draws), 0.5 / s, 0.003);
}

TEST(SamplingTest, RunIsFeasibleAndAudited) {
  std::mt19937_64 gen(8);
  const int n = 150;
  const int k = 120;
  const double epsilon = 0.35;
  const SetFunction g = testing::RandomCoverage(gen, n, 60);
  std::vector<double> costs(n);
  std::uniform_real_distribution<double> unit(0.0, 0.2);
  for (double& c : costs) c = unit(gen);
  const ModularCost ell(costs);
  const SamplingParams params = ComputeSamplingParams(n, k, epsilon);
  for (uint64_t seed = 0; seed < 3; ++seed) {
    const DiscreteResult run =
        RunDistortedRandomSamplingGreedy(g, ell, k, epsilon, RngStream(seed));
    EXPECT_LE(run.set.Count(), k);
    EXPECT_LE(run.g_queries, uint64_t{2} * k * params.sample_size);
    EXPECT_EQ(run.algorithm, Algorithm::kSamplingGreedy);
  }
  try {
    RunDistortedRandomSamplingGreedy(g, ell, 10, epsilon, RngStream(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEpsilonOutOfRange);
  }
}

TEST(DiscreteTest, InvalidK) {
  const SetFunction g = testing::TriangleCut();
  const ModularCost ell = ModularCost::Zero(3);
  EXPECT_THROW(RunDistortedRandomGreedy(g, ell, 0, RngStream(0)), Error);
  EXPECT_THROW(RunDistortedRandomGreedy(g, ell, 4, RngStream(0)), Error);
}

// Potential bookkeeping along instrumented trajectories, recomputed here from
// raw evaluations.
void CheckTelescoping(const SetFunction& g, const ModularCost& ell, int k,
                      const DiscreteResult& run) {
  auto power = [&](int m) { return std::pow(1.0 - 1.0 / k, m); };
  auto phi = [&](int i, const SubsetMask& s) {
    return power(k - i) * g.Eval(s) - ell(s);
  };
  ASSERT_EQ(static_cast<int>(run.trace.size()), k);
  for (int i = 0; i < k; ++i) {
    const DiscreteStep& step = run.trace[i];
    const SubsetMask& next = i + 1 < k ? run.trace[i + 1].before : run.set;
    double psi = 0.0;
    if (step.element >= 0) {
      const double gain =
          power(k - (i + 1)) *
              (g.Eval(step.before.With(step.element)) - g.Eval(step.before)) -
          ell.weights()[step.element];
      psi = std::max(0.0, gain);
    }
    const double lhs = phi(i + 1, next) - phi(i, step.before);
    const double rhs = psi + power(k - (i + 1)) / k * g.Eval(step.before);
    EXPECT_NEAR(lhs, rhs, 1e-9) << "step " << i;
  }
}

TEST(TelescopingTest, UnconstrainedTrajectories) {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 8;
    const SetFunction g =
        SetFunction::DirectedCut(n, testing::RandomEdges(gen, n, 0.4));
    const ModularCost ell(testing::RandomPoint(gen, n));
    const DiscreteResult run = RunUnconstrainedDistortedGreedy(
        g, ell, RngStream(trial), {.record_trace = true});
    CheckTelescoping(g, ell, n, run);
  }
}

TEST(TelescopingTest, RandomGreedyTrajectories) {
  std::mt19937_64 gen(10);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 7;
    const int k = 2 + trial % (n - 2);
    const SetFunction g =
        SetFunction::DirectedCut(n, testing::RandomEdges(gen, n, 0.4));
    const ModularCost ell(testing::RandomPoint(gen, n));
    const DiscreteResult run = RunDistortedRandomGreedy(
        g, ell, k, RngStream(trial), {.record_trace = true});
    CheckTelescoping(g, ell, k, run);
  }
}

TEST(TelescopingTest, SamplingGreedyTrajectories) {
  // The sampling variant needs k >= 114 for epsilon = 0.35 to be admissible.
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 3; ++trial) {
    const int n = 130;
    const int k = 120;
    const SetFunction g = testing::RandomCoverage(gen, n, 40);
    std::vector<double> costs(n);
    std::uniform_real_distribution<double> unit(0.0, 0.1);
    for (double& c : costs) c = unit(gen);
    const ModularCost ell(costs);
    const DiscreteResult run = RunDistortedRandomSamplingGreedy(
        g, ell, k, 0.35, RngStream(trial), {.record_trace = true});
    CheckTelescoping(g, ell, k, run);
  }
}

}  // namespace
}  // namespace regsub
