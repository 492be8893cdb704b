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

// Command-line front end over the C API.
//
//   regsub gen    --n 8 [--density 0.4 --max-weight 1 --cost-scale 0.3]
//                 [--seed S] [--k K | --blocks "0,1;2,3" --capacities 1,1]
//                 [--out instance.json]
//   regsub solve  --instance FILE [--algorithm auto] [--k K] [--epsilon E]
//                 [--seed S] [--reps R] [--threads T] [--verify] [--out CSV]
//   regsub verify (solve with --verify)
//   regsub sweep  --instance FILE --k 2,3,4 --epsilon 0.1,0.2 ...
//
// Exit codes: 0 success, 2 schema violation, 3 precondition violation,
// 4 size guard, 1 anything else.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regsub/regsub.h"

namespace {

struct InstanceDeleter {
  void operator()(regsub_instance* p) const { regsub_instance_free(p); }
};
using InstancePtr = std::unique_ptr<regsub_instance, InstanceDeleter>;

int ExitCodeFor(regsub_status status) {
  switch (status) {
    case REGSUB_OK:
      return 0;
    case REGSUB_ERR_SCHEMA:
    case REGSUB_ERR_PRECONDITION:
    case REGSUB_ERR_SIZE_GUARD:
      return static_cast<int>(status);
    default:
      return 1;
  }
}

int Fail(regsub_status status) {
  std::cerr << "regsub: " << regsub_status_name(status) << ": "
            << regsub_last_error() << "\n";
  return ExitCodeFor(status);
}

bool WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct GenOptions {
  regsub_cut_options cut{8, 0.4, 1.0, 0.3, 0};
  int k = -1;
  std::string blocks;
  std::vector<int> capacities;
  std::string out;
};

struct SolveOptions {
  std::string instance;
  std::string algorithm = "auto";
  std::vector<int> k;
  std::vector<double> epsilon{0.1};
  uint64_t seed = 0;
  int reps = 1;
  int threads = 1;
  int samples = 0;
  bool verify = false;
  std::string out;
};

// "0,1;2,3" -> flattened elements plus per-block sizes.
bool ParseBlocks(const std::string& text, std::vector<int>& elements,
                 std::vector<size_t>& sizes) {
  std::stringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, ';')) {
    std::stringstream items(block);
    std::string item;
    size_t count = 0;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      try {
        elements.push_back(std::stoi(item));
      } catch (const std::exception&) {
        return false;
      }
      ++count;
    }
    sizes.push_back(count);
  }
  return true;
}

int RunGen(const GenOptions& options) {
  regsub_instance* raw = nullptr;
  regsub_status status = regsub_instance_generate_cut(&options.cut, &raw);
  if (status != REGSUB_OK) return Fail(status);
  InstancePtr instance(raw);
  if (!options.blocks.empty()) {
    std::vector<int> elements;
    std::vector<size_t> sizes;
    if (!ParseBlocks(options.blocks, elements, sizes)) {
      std::cerr << "regsub: malformed --blocks\n";
      return 3;
    }
    if (sizes.size() != options.capacities.size()) {
      std::cerr << "regsub: --capacities needs one entry per block\n";
      return 3;
    }
    status = regsub_instance_set_partition(instance.get(), elements.data(),
                                           sizes.data(),
                                           options.capacities.data(),
                                           sizes.size());
  } else if (options.k >= 0) {
    status = regsub_instance_set_uniform(instance.get(), options.k);
  }
  if (status != REGSUB_OK) return Fail(status);
  char* json = nullptr;
  status = regsub_instance_to_json(instance.get(), &json);
  if (status != REGSUB_OK) return Fail(status);
  const bool ok = WriteOutput(options.out, json);
  regsub_string_free(json);
  if (!ok) {
    std::cerr << "regsub: cannot write " << options.out << "\n";
    return 1;
  }
  return 0;
}

int RunSolve(const SolveOptions& options, bool allow_lists) {
  if (!allow_lists && (options.k.size() > 1 || options.epsilon.size() > 1)) {
    std::cerr << "regsub: lists of --k/--epsilon need the sweep verb\n";
    return 3;
  }
  regsub_instance* raw = nullptr;
  regsub_status status = regsub_instance_load(options.instance.c_str(), &raw);
  if (status != REGSUB_OK) return Fail(status);
  InstancePtr instance(raw);

  regsub_experiment_config config;
  regsub_experiment_config_init(&config);
  status = regsub_parse_algorithm(options.algorithm.c_str(), &config.algorithm);
  if (status != REGSUB_OK) return Fail(status);
  config.seed = options.seed;
  config.reps = options.reps;
  config.threads = options.threads;
  config.verify = options.verify ? 1 : 0;
  config.samples = options.samples;

  const std::vector<int> ks = options.k.empty() ? std::vector<int>{0}
                                                : options.k;
  std::string csv;
  bool header = true;
  for (int k : ks) {
    for (double epsilon : options.epsilon) {
      config.k = k;
      config.epsilon = epsilon;
      char* text = nullptr;
      status = regsub_run_experiment(instance.get(), &config, header ? 1 : 0,
                                     &text);
      if (status != REGSUB_OK) return Fail(status);
      csv += text;
      regsub_string_free(text);
      header = false;
    }
  }
  if (!WriteOutput(options.out, csv)) {
    std::cerr << "regsub: cannot write " << options.out << "\n";
    return 1;
  }
  return 0;
}

void AddSolveFlags(CLI::App* cmd, SolveOptions& o, bool lists) {
  cmd->add_option("--instance", o.instance, "instance JSON file")->required();
  cmd->add_option("--algorithm", o.algorithm,
                  "continuous|random-greedy|sampling-greedy|unconstrained|auto");
  if (lists) {
    cmd->add_option("--k", o.k, "cardinality bounds")->delimiter(',');
    cmd->add_option("--epsilon", o.epsilon, "error parameters")
        ->delimiter(',');
  } else {
    cmd->add_option("--k", o.k, "cardinality bound")->expected(1);
    cmd->add_option("--epsilon", o.epsilon, "error parameter")->expected(1);
  }
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--reps", o.reps, "seeded replicas");
  cmd->add_option("--threads", o.threads, "worker threads");
  cmd->add_option("--samples", o.samples,
                  "continuous greedy samples per estimate (0 = default)");
  cmd->add_option("--out", o.out, "CSV output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularized non-monotone submodular maximization"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a digraph-cut instance");
  gen_cmd->add_option("--n", gen.cut.n, "ground set size")->required();
  gen_cmd->add_option("--density", gen.cut.edge_density, "edge probability");
  gen_cmd->add_option("--max-weight", gen.cut.max_weight, "largest edge weight");
  gen_cmd->add_option("--cost-scale", gen.cut.cost_scale,
                      "costs are uniform on [0, scale * M]");
  gen_cmd->add_option("--seed", gen.cut.seed, "generator seed");
  gen_cmd->add_option("--k", gen.k, "attach a uniform(k) constraint");
  gen_cmd->add_option("--blocks", gen.blocks,
                      "partition blocks, e.g. \"0,1;2,3\"");
  gen_cmd->add_option("--capacities", gen.capacities, "block capacities")
      ->delimiter(',');
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run seeded replicas");
  AddSolveFlags(solve_cmd, solve, false);
  solve_cmd->add_flag("--verify", solve.verify,
                      "compare with brute-force OPT (n <= 20)");

  SolveOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "solve and check the guarantee");
  AddSolveFlags(verify_cmd, verify, false);

  SolveOptions sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "solve over lists of k and epsilon");
  AddSolveFlags(sweep_cmd, sweep, true);
  sweep_cmd->add_flag("--verify", sweep.verify,
                      "compare with brute-force OPT (n <= 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*gen_cmd) return RunGen(gen);
  if (*solve_cmd) return RunSolve(solve, false);
  if (*verify_cmd) {
    verify.verify = true;
    return RunSolve(verify, false);
  }
  return RunSolve(sweep, true);
}
