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

#include "regsub/experiment.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "regsub/continuous_greedy.h"
#include "regsub/discrete.h"
#include "regsub/errors.h"
#include "regsub/exact.h"
#include "regsub/pipage.h"

namespace regsub {
namespace {

struct Plan {
  Algorithm algorithm = Algorithm::kUnconstrained;
  std::optional<int> k;
  std::optional<Matroid> matroid;
};

int ResolveK(const Instance& instance, const ExperimentConfig& config) {
  if (config.k) return *config.k;
  if (instance.constraint &&
      instance.constraint->kind() == MatroidKind::kUniform) {
    return instance.constraint->uniform_k();
  }
  throw Error(ErrorCode::kInvalidK,
              std::string(AlgorithmChoiceName(config.algorithm)) +
                  " needs k (flag or uniform constraint in the instance)");
}

void RequireKInRange(int k, int n) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidK, "k = " + std::to_string(k) +
                                          " outside [1, " +
                                          std::to_string(n) + "]");
  }
}

Plan MakePlan(const Instance& instance, const ExperimentConfig& config) {
  const int n = instance.n();
  Plan plan;
  switch (config.algorithm) {
    case AlgorithmChoice::kUnconstrained:
      plan.algorithm = Algorithm::kUnconstrained;
      return plan;
    case AlgorithmChoice::kRandomGreedy:
      plan.k = ResolveK(instance, config);
      RequireKInRange(*plan.k, n);
      plan.algorithm =
          *plan.k == 1 ? Algorithm::kSingletonScan : Algorithm::kRandomGreedy;
      return plan;
    case AlgorithmChoice::kSamplingGreedy: {
      plan.k = ResolveK(instance, config);
      RequireKInRange(*plan.k, n);
      if (*plan.k < 2) {
        throw Error(ErrorCode::kInvalidK, "sampling greedy needs k >= 2");
      }
      const double delta_star = SolveDeltaStar(*plan.k);
      if (!(config.epsilon > delta_star &&
            config.epsilon < 1.0 / std::numbers::e)) {
        throw Error(ErrorCode::kEpsilonOutOfRange,
                    "sampling greedy needs epsilon in (" +
                        std::to_string(delta_star) + ", 1/e); use auto");
      }
      plan.algorithm = Algorithm::kSamplingGreedy;
      return plan;
    }
    case AlgorithmChoice::kAuto:
      plan.k = ResolveK(instance, config);
      RequireKInRange(*plan.k, n);
      plan.algorithm = SelectCardinalityAlgorithm(*plan.k, config.epsilon);
      return plan;
    case AlgorithmChoice::kContinuous:
      if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
        throw Error(ErrorCode::kEpsilonOutOfRange,
                    "continuous greedy needs epsilon in (0,1)");
      }
      if (instance.constraint) {
        plan.matroid = instance.constraint;
      } else if (config.k) {
        plan.matroid = Matroid::Uniform(n, *config.k);
      } else {
        throw Error(ErrorCode::kInvalidK,
                    "continuous needs a matroid constraint or k");
      }
      if (plan.matroid->kind() == MatroidKind::kUniform) {
        plan.k = plan.matroid->uniform_k();
      }
      plan.algorithm = Algorithm::kContinuous;
      return plan;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

SubsetMask RunOnce(const Instance& instance, const ExperimentConfig& config,
                   const Plan& plan, const RngStream& stream,
                   uint64_t* queries) {
  switch (plan.algorithm) {
    case Algorithm::kContinuous: {
      ContinuousGreedyConfig cg;
      cg.epsilon = config.epsilon;
      cg.samples = config.samples;
      cg.record_trajectory = false;
      const ContinuousGreedyResult fractional = RunMeasuredContinuousGreedy(
          instance.g, instance.ell, *plan.matroid, cg, stream.Derive(0));
      RngStream rounding = stream.Derive(1);
      *queries = fractional.g_queries;
      return PipageRound(*plan.matroid, fractional.y, rounding);
    }
    case Algorithm::kSingletonScan: {
      DiscreteResult r = RunSingletonScan(instance.g, instance.ell);
      *queries = r.g_queries;
      return std::move(r.set);
    }
    case Algorithm::kRandomGreedy: {
      DiscreteResult r =
          RunDistortedRandomGreedy(instance.g, instance.ell, *plan.k, stream);
      *queries = r.g_queries;
      return std::move(r.set);
    }
    case Algorithm::kSamplingGreedy: {
      DiscreteResult r = RunDistortedRandomSamplingGreedy(
          instance.g, instance.ell, *plan.k, config.epsilon, stream);
      *queries = r.g_queries;
      return std::move(r.set);
    }
    case Algorithm::kUnconstrained: {
      DiscreteResult r =
          RunUnconstrainedDistortedGreedy(instance.g, instance.ell, stream);
      *queries = r.g_queries;
      return std::move(r.set);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

VerifyRecord Verify(const Instance& instance, const ExperimentConfig& config,
                    const Plan& plan, const ExperimentSummary& summary) {
  const SetFunction g = instance.g.Fork();
  Constraint constraint = Unconstrained{};
  BoundForm form = BoundForm::kUnconstrained;
  BoundParams params;
  params.n = instance.n();
  params.k = plan.k;
  params.epsilon = config.epsilon;
  switch (plan.algorithm) {
    case Algorithm::kUnconstrained:
      break;
    case Algorithm::kSingletonScan:
    case Algorithm::kRandomGreedy:
      constraint = CardinalityAtMost{*plan.k};
      form = BoundForm::kCardinalityRandomGreedy;
      break;
    case Algorithm::kSamplingGreedy:
      constraint = CardinalityAtMost{*plan.k};
      form = BoundForm::kCardinalitySampling;
      break;
    case Algorithm::kContinuous:
      constraint = *plan.matroid;
      form = BoundForm::kMatroidContinuous;
      params.m = ComputeM(g);
      break;
  }
  const OptResult opt = BruteForceOpt(g, instance.ell, constraint);
  VerifyRecord record;
  record.opt_g = opt.g_value;
  record.opt_ell = opt.ell_value;
  record.bound = GuaranteeBound(form, opt.g_value, opt.ell_value, params);
  record.satisfied = summary.mean_objective >=
                     record.bound - 3.0 * summary.objective_std_error;
  return record;
}

std::string Num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string Fixed3(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

std::string OptionalInt(const std::optional<int>& value) {
  return value ? std::to_string(*value) : std::string();
}

}  // namespace

AlgorithmChoice ParseAlgorithmChoice(std::string_view name) {
  if (name == "continuous") return AlgorithmChoice::kContinuous;
  if (name == "random-greedy") return AlgorithmChoice::kRandomGreedy;
  if (name == "sampling-greedy") return AlgorithmChoice::kSamplingGreedy;
  if (name == "unconstrained") return AlgorithmChoice::kUnconstrained;
  if (name == "auto") return AlgorithmChoice::kAuto;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown algorithm '" + std::string(name) + "'");
}

const char* AlgorithmChoiceName(AlgorithmChoice choice) {
  switch (choice) {
    case AlgorithmChoice::kContinuous:
      return "continuous";
    case AlgorithmChoice::kRandomGreedy:
      return "random-greedy";
    case AlgorithmChoice::kSamplingGreedy:
      return "sampling-greedy";
    case AlgorithmChoice::kUnconstrained:
      return "unconstrained";
    case AlgorithmChoice::kAuto:
      return "auto";
  }
  return "unknown";
}

ExperimentResult RunExperiment(const Instance& instance,
                               const ExperimentConfig& config) {
  if (config.reps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "reps must be >= 1");
  }
  if (config.threads < 1) {
    throw Error(ErrorCode::kInvalidArgument, "threads must be >= 1");
  }
  if (config.samples && *config.samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  }
  if (config.verify && instance.n() > kMaxEnumerableN) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "verify needs n <= 20, instance has n = " +
                    std::to_string(instance.n()));
  }
  const Plan plan = MakePlan(instance, config);
  const char* name = AlgorithmName(plan.algorithm);

  ExperimentResult result;
  result.config = config;
  result.runs.resize(config.reps);
  const RngStream base(config.seed);
  ParallelFor(config.reps, config.threads, [&](int i) {
    const auto start = std::chrono::steady_clock::now();
    uint64_t queries = 0;
    SubsetMask set = RunOnce(instance, config, plan,
                             base.Derive(static_cast<uint64_t>(i)), &queries);
    const auto stop = std::chrono::steady_clock::now();
    RunRecord& run = result.runs[i];
    run.algorithm = name;
    run.n = instance.n();
    run.k = plan.k;
    run.epsilon = config.epsilon;
    run.seed = config.seed;
    run.g_value = instance.g.Fork().Eval(set);
    run.ell_value = instance.ell(set);
    run.objective = run.g_value - run.ell_value;
    run.g_queries = queries;
    run.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    run.set = std::move(set);
  });

  ExperimentSummary& summary = result.summary;
  summary.algorithm = std::string(name) + "/summary";
  std::vector<double> objectives;
  for (const RunRecord& run : result.runs) {
    summary.mean_set_size += run.set.Count();
    summary.mean_g += run.g_value;
    summary.mean_ell += run.ell_value;
    summary.mean_queries += static_cast<double>(run.g_queries);
    summary.total_elapsed_ms += run.elapsed_ms;
    objectives.push_back(run.objective);
  }
  const double reps = config.reps;
  summary.mean_set_size /= reps;
  summary.mean_g /= reps;
  summary.mean_ell /= reps;
  summary.mean_queries /= reps;
  const Expectation expectation = Summarize(std::move(objectives));
  summary.mean_objective = expectation.mean;
  summary.objective_std_error = expectation.std_error;
  if (config.verify) summary.verify = Verify(instance, config, plan, summary);
  return result;
}

void WriteCsv(std::ostream& out, const ExperimentResult& result,
              bool include_header) {
  if (include_header) out << kCsvHeader << "\n";
  for (const RunRecord& run : result.runs) {
    out << run.algorithm << ',' << run.n << ',' << OptionalInt(run.k) << ','
        << Num(run.epsilon) << ',' << run.seed << ',' << run.set.Count() << ','
        << Num(run.g_value) << ',' << Num(run.ell_value) << ','
        << Num(run.objective) << ',' << run.g_queries << ','
        << Fixed3(run.elapsed_ms) << ",,,,,\n";
  }
  const ExperimentSummary& s = result.summary;
  const RunRecord& first = result.runs.front();
  out << s.algorithm << ',' << first.n << ',' << OptionalInt(first.k) << ','
      << Num(first.epsilon) << ',' << result.config.seed << ','
      << Num(s.mean_set_size) << ',' << Num(s.mean_g) << ','
      << Num(s.mean_ell) << ',' << Num(s.mean_objective) << ','
      << Num(s.mean_queries) << ',' << Fixed3(s.total_elapsed_ms) << ',';
  if (s.verify) {
    out << Num(s.verify->opt_g) << ',' << Num(s.verify->opt_ell) << ','
        << Num(s.verify->bound) << ',' << (s.verify->satisfied ? "true" : "false");
  } else {
    out << ",,,";
  }
  out << ',' << Num(s.objective_std_error) << "\n";
}

}  // namespace regsub
