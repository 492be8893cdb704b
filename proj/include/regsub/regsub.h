/* Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the regularized submodular maximization library.
 *
 * Every fallible call returns a regsub_status. On failure a human-readable
 * message for the calling thread is available from regsub_last_error()
 * until the next failing call on that thread. Objects are opaque handles
 * owned by the caller and released with the matching *_free function.
 */
#ifndef REGSUB_REGSUB_H_
#define REGSUB_REGSUB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define REGSUB_API __declspec(dllexport)
#else
#define REGSUB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2, 3 and 4 double as CLI exit codes. */
typedef enum regsub_status {
  REGSUB_OK = 0,
  REGSUB_ERR_INTERNAL = 1,
  REGSUB_ERR_SCHEMA = 2,
  REGSUB_ERR_PRECONDITION = 3,
  REGSUB_ERR_SIZE_GUARD = 4,
  REGSUB_ERR_IO = 5,
  REGSUB_ERR_NULL_ARGUMENT = 6
} regsub_status;

typedef enum regsub_algorithm {
  REGSUB_ALGORITHM_CONTINUOUS = 0,
  REGSUB_ALGORITHM_RANDOM_GREEDY = 1,
  REGSUB_ALGORITHM_SAMPLING_GREEDY = 2,
  REGSUB_ALGORITHM_UNCONSTRAINED = 3,
  REGSUB_ALGORITHM_AUTO = 4
} regsub_algorithm;

typedef struct regsub_instance regsub_instance;

typedef struct regsub_cut_options {
  int n;
  double edge_density;
  double max_weight;
  double cost_scale;
  uint64_t seed;
} regsub_cut_options;

typedef struct regsub_experiment_config {
  regsub_algorithm algorithm;
  int k;        /* <= 0: take k from the instance's uniform constraint */
  double epsilon;
  uint64_t seed;
  int reps;
  int verify;   /* non-zero: compare against brute force (n <= 20) */
  int threads;
  int samples;  /* continuous greedy sample override; <= 0 for the default */
} regsub_experiment_config;

/* One run's output. `elements` is allocated by the library. */
typedef struct regsub_solution {
  int* elements;
  size_t size;
  double g_value;
  double ell_value;
  double objective;
  uint64_t g_queries;
} regsub_solution;

REGSUB_API const char* regsub_last_error(void);
REGSUB_API const char* regsub_status_name(regsub_status status);

/* Fills `config` with defaults: auto, k from instance, epsilon 0.1, seed 0,
 * one replica, no verification, one thread. */
REGSUB_API void regsub_experiment_config_init(regsub_experiment_config* config);
/* Accepts "continuous", "random-greedy", "sampling-greedy",
 * "unconstrained" and "auto". */
REGSUB_API regsub_status regsub_parse_algorithm(const char* name,
                                                regsub_algorithm* out);

REGSUB_API regsub_status regsub_instance_load(const char* path,
                                              regsub_instance** out);
REGSUB_API regsub_status regsub_instance_save(const regsub_instance* instance,
                                              const char* path);
REGSUB_API regsub_status regsub_instance_from_json(const char* json,
                                                   regsub_instance** out);
/* *out is released with regsub_string_free. */
REGSUB_API regsub_status regsub_instance_to_json(
    const regsub_instance* instance, char** out);
REGSUB_API regsub_status regsub_instance_generate_cut(
    const regsub_cut_options* options, regsub_instance** out);
REGSUB_API void regsub_instance_free(regsub_instance* instance);

REGSUB_API int regsub_instance_size(const regsub_instance* instance);
/* k < 0 removes the constraint. */
REGSUB_API regsub_status regsub_instance_set_uniform(regsub_instance* instance,
                                                     int k);
/* Block b holds the block_sizes[b] entries of `elements` that follow the
 * previous blocks. */
REGSUB_API regsub_status regsub_instance_set_partition(
    regsub_instance* instance, const int* elements, const size_t* block_sizes,
    const int* capacities, size_t block_count);

/* g(A) and l(A) for the listed elements. */
REGSUB_API regsub_status regsub_instance_evaluate(
    const regsub_instance* instance, const int* elements, size_t count,
    double* g_value, double* ell_value);
REGSUB_API regsub_status regsub_instance_compute_m(
    const regsub_instance* instance, double* out);

/* A single seeded run (config->reps is ignored). */
REGSUB_API regsub_status regsub_solve(const regsub_instance* instance,
                                      const regsub_experiment_config* config,
                                      regsub_solution* out);
REGSUB_API void regsub_solution_free(regsub_solution* solution);

/* Runs all replicas and renders the CSV report into *csv_out. */
REGSUB_API regsub_status regsub_run_experiment(
    const regsub_instance* instance, const regsub_experiment_config* config,
    int include_header, char** csv_out);

REGSUB_API void regsub_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* REGSUB_REGSUB_H_ */
