/*
Copyright 2026 The swipt-cj Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

/* C interface to the secrecy power-allocation solvers and the experiment
 * runner. All functions report failures through swipt_status; the message of
 * the most recent failure on the calling thread is available from
 * swipt_last_error(). Handles are opaque and owned by the caller, who
 * releases them with the matching *_free function. */

#ifndef SWIPT_SWIPT_H_
#define SWIPT_SWIPT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SWIPT_API __declspec(dllexport)
#else
#define SWIPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swipt_status {
  SWIPT_OK = 0,
  SWIPT_ERR_INVALID_ARGUMENT = 1,
  SWIPT_ERR_CONFIG = 2,
  SWIPT_ERR_IO = 3,
  SWIPT_ERR_OUT_OF_RANGE = 4,
  SWIPT_ERR_INTERNAL = 5
} swipt_status;

typedef enum swipt_scheme {
  SWIPT_SCHEME_PROPOSED = 0,
  SWIPT_SCHEME_EPA = 1,
  SWIPT_SCHEME_NOJAMMER = 2,
  SWIPT_SCHEME_NOCANCEL = 3
} swipt_scheme;

typedef struct swipt_config swipt_config;
typedef struct swipt_results swipt_results;
typedef struct swipt_summary swipt_summary;
typedef struct swipt_problem swipt_problem;

SWIPT_API const char* swipt_version(void);
/* Message of the last failed call on this thread; "" if none. */
SWIPT_API const char* swipt_last_error(void);

/* ---- experiment configuration ---- */

/* Parses a `key = value` document. Missing keys keep their defaults. */
SWIPT_API swipt_status swipt_config_parse(const char* text, swipt_config** out);
SWIPT_API swipt_status swipt_config_load(const char* path, swipt_config** out);
SWIPT_API void swipt_config_free(swipt_config* cfg);
SWIPT_API swipt_status swipt_config_set_seed(swipt_config* cfg, uint64_t seed);
SWIPT_API swipt_status swipt_config_set_trials(swipt_config* cfg, int trials);
/* name: "qbar", "p", "d1" or "p_d1". */
SWIPT_API swipt_status swipt_config_set_sweep(swipt_config* cfg,
                                              const char* name);

/* ---- experiment results ---- */

typedef struct swipt_row {
  const char* sweep_name; /* valid while the results handle lives */
  double sweep_value;
  int trial;
  swipt_scheme scheme;
  double secrecy_rate_bits;
  int feasible;
  int iterations;
  double runtime_ms;
  uint64_t seed;
  const char* fading;
} swipt_row;

/* threads <= 0 uses SWIPT_THREADS, or the hardware concurrency. */
SWIPT_API swipt_status swipt_run_experiment(const swipt_config* cfg,
                                            int threads, swipt_results** out);
SWIPT_API size_t swipt_results_size(const swipt_results* res);
SWIPT_API swipt_status swipt_results_get(const swipt_results* res, size_t i,
                                         swipt_row* out);
SWIPT_API swipt_status swipt_results_write_csv(const swipt_results* res,
                                               const char* path);
SWIPT_API swipt_status swipt_results_read_csv(const char* path,
                                              swipt_results** out);
SWIPT_API void swipt_results_free(swipt_results* res);

typedef struct swipt_summary_row {
  const char* sweep_name;
  double sweep_value;
  swipt_scheme scheme;
  int trials;
  double mean_rate_bits;
  double ci_half_width;
  double feasible_fraction;
} swipt_summary_row;

SWIPT_API swipt_status swipt_results_summarize(const swipt_results* res,
                                               swipt_summary** out);
SWIPT_API size_t swipt_summary_size(const swipt_summary* sum);
SWIPT_API swipt_status swipt_summary_get(const swipt_summary* sum, size_t i,
                                         swipt_summary_row* out);
SWIPT_API void swipt_summary_free(swipt_summary* sum);

SWIPT_API const char* swipt_scheme_name(swipt_scheme scheme);

/* ---- single problem instances ---- */

typedef struct swipt_params {
  size_t n_sc;
  double total_power_w;
  double noise_w;
  double peak_p_w;
  double peak_q_w;
  double eh_min_w;
  double zeta;
} swipt_params;

/* Defaults of the reference scenario: N = 64, P = 1 W, noise 1e-9 W,
 * peaks 2P/N, harvested-power requirement 100 uW, zeta = 1. */
SWIPT_API void swipt_params_default(swipt_params* out);

/* Copies the n_sc-long gain arrays. */
SWIPT_API swipt_status swipt_problem_create(const swipt_params* params,
                                            const double* h_i,
                                            const double* h_e,
                                            const double* h_j,
                                            const double* g_i,
                                            const double* g_e,
                                            swipt_problem** out);
SWIPT_API void swipt_problem_free(swipt_problem* prob);

typedef struct swipt_solution {
  double secrecy_rate_bits;
  int feasible;
  int iterations;
  double dual_bound; /* proposed scheme only, else 0 */
  double gap;        /* proposed scheme only, else 0 */
} swipt_solution;

/* p_out and q_out may be NULL; otherwise they receive n_sc values each. */
SWIPT_API swipt_status swipt_problem_solve(const swipt_problem* prob,
                                           swipt_scheme scheme, double* p_out,
                                           double* q_out, swipt_solution* out);

#ifdef __cplusplus
}
#endif

#endif /* SWIPT_SWIPT_H_ */
