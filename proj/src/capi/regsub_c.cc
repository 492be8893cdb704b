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

#include "regsub/regsub.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "regsub/errors.h"
#include "regsub/experiment.h"
#include "regsub/instance.h"

struct regsub_instance {
  regsub::Instance instance;
};

namespace {

thread_local std::string last_error;

regsub_status StatusFor(regsub::ErrorCode code) {
  using regsub::ErrorCode;
  switch (code) {
    case ErrorCode::kSchemaViolation:
      return REGSUB_ERR_SCHEMA;
    case ErrorCode::kGroundSetTooLarge:
      return REGSUB_ERR_SIZE_GUARD;
    case ErrorCode::kIo:
      return REGSUB_ERR_IO;
    default:
      return REGSUB_ERR_PRECONDITION;
  }
}

template <typename F>
regsub_status Guard(F&& body) {
  try {
    body();
    return REGSUB_OK;
  } catch (const regsub::Error& e) {
    last_error = e.what();
    return StatusFor(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return REGSUB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return REGSUB_ERR_INTERNAL;
  }
}

regsub_status NullArgument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return REGSUB_ERR_NULL_ARGUMENT;
}

char* CopyString(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

regsub::ExperimentConfig ToConfig(const regsub_experiment_config& c) {
  regsub::ExperimentConfig config;
  switch (c.algorithm) {
    case REGSUB_ALGORITHM_CONTINUOUS:
      config.algorithm = regsub::AlgorithmChoice::kContinuous;
      break;
    case REGSUB_ALGORITHM_RANDOM_GREEDY:
      config.algorithm = regsub::AlgorithmChoice::kRandomGreedy;
      break;
    case REGSUB_ALGORITHM_SAMPLING_GREEDY:
      config.algorithm = regsub::AlgorithmChoice::kSamplingGreedy;
      break;
    case REGSUB_ALGORITHM_UNCONSTRAINED:
      config.algorithm = regsub::AlgorithmChoice::kUnconstrained;
      break;
    case REGSUB_ALGORITHM_AUTO:
      config.algorithm = regsub::AlgorithmChoice::kAuto;
      break;
    default:
      throw regsub::Error(regsub::ErrorCode::kInvalidArgument,
                          "unknown algorithm id");
  }
  if (c.k > 0) config.k = c.k;
  config.epsilon = c.epsilon;
  config.seed = c.seed;
  config.reps = c.reps;
  config.verify = c.verify != 0;
  config.threads = c.threads;
  if (c.samples > 0) config.samples = c.samples;
  return config;
}

}  // namespace

extern "C" {

const char* regsub_last_error(void) { return last_error.c_str(); }

const char* regsub_status_name(regsub_status status) {
  switch (status) {
    case REGSUB_OK:
      return "ok";
    case REGSUB_ERR_INTERNAL:
      return "internal_error";
    case REGSUB_ERR_SCHEMA:
      return "schema_violation";
    case REGSUB_ERR_PRECONDITION:
      return "precondition_violation";
    case REGSUB_ERR_SIZE_GUARD:
      return "size_guard";
    case REGSUB_ERR_IO:
      return "io_error";
    case REGSUB_ERR_NULL_ARGUMENT:
      return "null_argument";
  }
  return "unknown";
}

void regsub_experiment_config_init(regsub_experiment_config* config) {
  if (config == nullptr) return;
  config->algorithm = REGSUB_ALGORITHM_AUTO;
  config->k = 0;
  config->epsilon = 0.1;
  config->seed = 0;
  config->reps = 1;
  config->verify = 0;
  config->threads = 1;
  config->samples = 0;
}

regsub_status regsub_parse_algorithm(const char* name, regsub_algorithm* out) {
  if (name == nullptr) return NullArgument("name");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    *out = static_cast<regsub_algorithm>(regsub::ParseAlgorithmChoice(name));
  });
}

regsub_status regsub_instance_load(const char* path, regsub_instance** out) {
  if (path == nullptr) return NullArgument("path");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    *out = new regsub_instance{regsub::LoadInstance(path)};
  });
}

regsub_status regsub_instance_save(const regsub_instance* instance,
                                   const char* path) {
  if (instance == nullptr) return NullArgument("instance");
  if (path == nullptr) return NullArgument("path");
  return Guard([&] { regsub::SaveInstance(path, instance->instance); });
}

regsub_status regsub_instance_from_json(const char* json,
                                        regsub_instance** out) {
  if (json == nullptr) return NullArgument("json");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    *out = new regsub_instance{regsub::ParseInstance(json)};
  });
}

regsub_status regsub_instance_to_json(const regsub_instance* instance,
                                      char** out) {
  if (instance == nullptr) return NullArgument("instance");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    *out = CopyString(regsub::SerializeInstance(instance->instance));
  });
}

regsub_status regsub_instance_generate_cut(const regsub_cut_options* options,
                                           regsub_instance** out) {
  if (options == nullptr) return NullArgument("options");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    regsub::CutInstanceOptions o;
    o.n = options->n;
    o.edge_density = options->edge_density;
    o.max_weight = options->max_weight;
    o.cost_scale = options->cost_scale;
    o.seed = options->seed;
    *out = new regsub_instance{regsub::GenerateDigraphCutInstance(o)};
  });
}

void regsub_instance_free(regsub_instance* instance) { delete instance; }

int regsub_instance_size(const regsub_instance* instance) {
  return instance == nullptr ? 0 : instance->instance.n();
}

regsub_status regsub_instance_set_uniform(regsub_instance* instance, int k) {
  if (instance == nullptr) return NullArgument("instance");
  return Guard([&] {
    if (k < 0) {
      instance->instance.constraint.reset();
    } else {
      instance->instance.constraint =
          regsub::Matroid::Uniform(instance->instance.n(), k);
    }
  });
}

regsub_status regsub_instance_set_partition(regsub_instance* instance,
                                            const int* elements,
                                            const size_t* block_sizes,
                                            const int* capacities,
                                            size_t block_count) {
  if (instance == nullptr) return NullArgument("instance");
  if (block_count > 0 && (block_sizes == nullptr || capacities == nullptr)) {
    return NullArgument("block_sizes/capacities");
  }
  return Guard([&] {
    std::vector<std::vector<int>> blocks(block_count);
    size_t offset = 0;
    for (size_t b = 0; b < block_count; ++b) {
      if (block_sizes[b] > 0 && elements == nullptr) {
        throw regsub::Error(regsub::ErrorCode::kInvalidArgument,
                            "null elements");
      }
      blocks[b].assign(elements + offset, elements + offset + block_sizes[b]);
      offset += block_sizes[b];
    }
    instance->instance.constraint = regsub::Matroid::Partition(
        instance->instance.n(), std::move(blocks),
        std::vector<int>(capacities, capacities + block_count));
  });
}

regsub_status regsub_instance_evaluate(const regsub_instance* instance,
                                       const int* elements, size_t count,
                                       double* g_value, double* ell_value) {
  if (instance == nullptr) return NullArgument("instance");
  if (count > 0 && elements == nullptr) return NullArgument("elements");
  return Guard([&] {
    const regsub::Instance& inst = instance->instance;
    const regsub::SubsetMask set = regsub::SubsetMask::FromElements(
        inst.n(), std::span<const int>(elements, count));
    if (g_value != nullptr) *g_value = inst.g.Eval(set);
    if (ell_value != nullptr) *ell_value = inst.ell(set);
  });
}

regsub_status regsub_instance_compute_m(const regsub_instance* instance,
                                        double* out) {
  if (instance == nullptr) return NullArgument("instance");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] { *out = regsub::ComputeM(instance->instance.g); });
}

regsub_status regsub_solve(const regsub_instance* instance,
                           const regsub_experiment_config* config,
                           regsub_solution* out) {
  if (instance == nullptr) return NullArgument("instance");
  if (config == nullptr) return NullArgument("config");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    regsub::ExperimentConfig cfg = ToConfig(*config);
    cfg.reps = 1;
    cfg.verify = false;
    const regsub::ExperimentResult result =
        regsub::RunExperiment(instance->instance, cfg);
    const regsub::RunRecord& run = result.runs.front();
    const std::vector<int> elements = run.set.Elements();
    int* buffer = nullptr;
    if (!elements.empty()) {
      buffer = static_cast<int*>(std::malloc(elements.size() * sizeof(int)));
      if (buffer == nullptr) throw std::bad_alloc();
      std::memcpy(buffer, elements.data(), elements.size() * sizeof(int));
    }
    out->elements = buffer;
    out->size = elements.size();
    out->g_value = run.g_value;
    out->ell_value = run.ell_value;
    out->objective = run.objective;
    out->g_queries = run.g_queries;
  });
}

void regsub_solution_free(regsub_solution* solution) {
  if (solution == nullptr) return;
  std::free(solution->elements);
  solution->elements = nullptr;
  solution->size = 0;
}

regsub_status regsub_run_experiment(const regsub_instance* instance,
                                    const regsub_experiment_config* config,
                                    int include_header, char** csv_out) {
  if (instance == nullptr) return NullArgument("instance");
  if (config == nullptr) return NullArgument("config");
  if (csv_out == nullptr) return NullArgument("csv_out");
  return Guard([&] {
    const regsub::ExperimentResult result =
        regsub::RunExperiment(instance->instance, ToConfig(*config));
    std::ostringstream csv;
    regsub::WriteCsv(csv, result, include_header != 0);
    *csv_out = CopyString(csv.str());
  });
}

void regsub_string_free(char* text) { std::free(text); }

}  // extern "C"
