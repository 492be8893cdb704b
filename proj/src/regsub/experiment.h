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

#ifndef REGSUB_EXPERIMENT_H_
#define REGSUB_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "regsub/instance.h"
#include "regsub/rng.h"
#include "regsub/subset_mask.h"

namespace regsub {

enum class AlgorithmChoice {
  kContinuous,
  kRandomGreedy,
  kSamplingGreedy,
  kUnconstrained,
  kAuto,
};

// "continuous", "random-greedy", "sampling-greedy", "unconstrained", "auto".
AlgorithmChoice ParseAlgorithmChoice(std::string_view name);
const char* AlgorithmChoiceName(AlgorithmChoice choice);

struct ExperimentConfig {
  AlgorithmChoice algorithm = AlgorithmChoice::kAuto;
  // Cardinality bound; falls back to the instance's uniform constraint.
  std::optional<int> k;
  double epsilon = 0.1;
  uint64_t seed = 0;
  int reps = 1;
  bool verify = false;
  int threads = 1;
  // Continuous greedy sample count override.
  std::optional<int> samples;
};

struct RunRecord {
  std::string algorithm;
  int n = 0;
  std::optional<int> k;
  double epsilon = 0.0;
  uint64_t seed = 0;
  SubsetMask set;
  double g_value = 0.0;
  double ell_value = 0.0;
  double objective = 0.0;
  uint64_t g_queries = 0;
  double elapsed_ms = 0.0;
};

struct VerifyRecord {
  double opt_g = 0.0;
  double opt_ell = 0.0;
  double bound = 0.0;
  // mean >= bound - 3 stderr.
  bool satisfied = false;
};

struct ExperimentSummary {
  std::string algorithm;
  double mean_set_size = 0.0;
  double mean_g = 0.0;
  double mean_ell = 0.0;
  double mean_objective = 0.0;
  double objective_std_error = 0.0;
  double mean_queries = 0.0;
  double total_elapsed_ms = 0.0;
  std::optional<VerifyRecord> verify;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<RunRecord> runs;
  ExperimentSummary summary;
};

// Runs config.reps replicas; replica i draws from
// RngStream(config.seed).Derive(i) and rows come back in replica order.
// Preconditions are checked before any replica runs; with verify set,
// n > 20 raises ground_set_too_large.
ExperimentResult RunExperiment(const Instance& instance,
                               const ExperimentConfig& config);

// Column order is fixed:
// algorithm,n,k,epsilon,seed,set_size,g_value,ell_value,objective,g_queries,
// elapsed_ms,opt_g,opt_ell,bound,bound_satisfied,objective_stderr
inline constexpr std::string_view kCsvHeader =
    "algorithm,n,k,epsilon,seed,set_size,g_value,ell_value,objective,"
    "g_queries,elapsed_ms,opt_g,opt_ell,bound,bound_satisfied,"
    "objective_stderr";

// One row per run, then the summary row.
void WriteCsv(std::ostream& out, const ExperimentResult& result,
              bool include_header = true);

}  // namespace regsub

#endif  // REGSUB_EXPERIMENT_H_
