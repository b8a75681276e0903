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

#include "swipt/swipt.h"

#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "swipt/baselines.h"
#include "swipt/dual.h"
#include "swipt/experiment.h"

struct swipt_config {
  swipt::ExperimentConfig cfg;
};

struct swipt_results {
  std::vector<swipt::ResultRow> rows;
};

struct swipt_summary {
  std::vector<swipt::AggregateRow> rows;
};

struct swipt_problem {
  swipt::SystemParams params;
  swipt::ChannelState channel;
};

namespace {

thread_local std::string g_last_error;

swipt_status Fail(swipt_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
swipt_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const swipt::ConfigError& e) {
    return Fail(SWIPT_ERR_CONFIG, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(SWIPT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return Fail(SWIPT_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SWIPT_ERR_INTERNAL, "out of memory");
  } catch (const std::runtime_error& e) {
    return Fail(SWIPT_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return Fail(SWIPT_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(SWIPT_ERR_INTERNAL, "unknown error");
  }
}

swipt_scheme ToC(swipt::Scheme s) { return static_cast<swipt_scheme>(s); }

bool FromC(swipt_scheme s, swipt::Scheme* out) {
  switch (s) {
    case SWIPT_SCHEME_PROPOSED:
    case SWIPT_SCHEME_EPA:
    case SWIPT_SCHEME_NOJAMMER:
    case SWIPT_SCHEME_NOCANCEL:
      *out = static_cast<swipt::Scheme>(s);
      return true;
  }
  return false;
}

}  // namespace

extern "C" {

const char* swipt_version(void) { return "0.1.0"; }

const char* swipt_last_error(void) { return g_last_error.c_str(); }

swipt_status swipt_config_parse(const char* text, swipt_config** out) {
  if (!text || !out) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new swipt_config{swipt::parse_config(text)};
    return SWIPT_OK;
  });
}

swipt_status swipt_config_load(const char* path, swipt_config** out) {
  if (!path || !out) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new swipt_config{swipt::load_config(path)};
    return SWIPT_OK;
  });
}

void swipt_config_free(swipt_config* cfg) { delete cfg; }

swipt_status swipt_config_set_seed(swipt_config* cfg, uint64_t seed) {
  if (!cfg) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null config");
  cfg->cfg.seed = seed;
  return SWIPT_OK;
}

swipt_status swipt_config_set_trials(swipt_config* cfg, int trials) {
  if (!cfg) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null config");
  if (trials < 1) return Fail(SWIPT_ERR_CONFIG, "trials must be >= 1");
  cfg->cfg.trials = trials;
  return SWIPT_OK;
}

swipt_status swipt_config_set_sweep(swipt_config* cfg, const char* name) {
  if (!cfg || !name) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    cfg->cfg.sweep = swipt::ParseSweepKind(name);
    return SWIPT_OK;
  });
}

swipt_status swipt_run_experiment(const swipt_config* cfg, int threads,
                                  swipt_results** out) {
  if (!cfg || !out) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    swipt::RunOptions opts;
    opts.threads = threads;
    *out = new swipt_results{swipt::run_experiment(cfg->cfg, opts)};
    return SWIPT_OK;
  });
}

size_t swipt_results_size(const swipt_results* res) {
  return res ? res->rows.size() : 0;
}

swipt_status swipt_results_get(const swipt_results* res, size_t i,
                               swipt_row* out) {
  if (!res || !out) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= res->rows.size())
    return Fail(SWIPT_ERR_OUT_OF_RANGE, "row index out of range");
  const swipt::ResultRow& r = res->rows[i];
  *out = swipt_row{r.sweep_name.c_str(), r.sweep_value,
                   r.trial,              ToC(r.scheme),
                   r.secrecy_rate_bits,  r.feasible ? 1 : 0,
                   r.iterations,         r.runtime_ms,
                   r.seed,               swipt::ToString(r.fading)};
  return SWIPT_OK;
}

swipt_status swipt_results_write_csv(const swipt_results* res,
                                     const char* path) {
  if (!res || !path) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    swipt::write_csv(res->rows, path);
    return SWIPT_OK;
  });
}

swipt_status swipt_results_read_csv(const char* path, swipt_results** out) {
  if (!path || !out) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new swipt_results{swipt::read_csv(path)};
    return SWIPT_OK;
  });
}

void swipt_results_free(swipt_results* res) { delete res; }

swipt_status swipt_results_summarize(const swipt_results* res,
                                     swipt_summary** out) {
  if (!res || !out) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new swipt_summary{swipt::aggregate(res->rows)};
    return SWIPT_OK;
  });
}

size_t swipt_summary_size(const swipt_summary* sum) {
  return sum ? sum->rows.size() : 0;
}

swipt_status swipt_summary_get(const swipt_summary* sum, size_t i,
                               swipt_summary_row* out) {
  if (!sum || !out) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= sum->rows.size())
    return Fail(SWIPT_ERR_OUT_OF_RANGE, "summary index out of range");
  const swipt::AggregateRow& a = sum->rows[i];
  *out = swipt_summary_row{a.sweep_name.c_str(), a.sweep_value,
                           ToC(a.scheme),        a.trials,
                           a.mean_rate,          a.ci_half_width,
                           a.feasible_fraction};
  return SWIPT_OK;
}

void swipt_summary_free(swipt_summary* sum) { delete sum; }

const char* swipt_scheme_name(swipt_scheme scheme) {
  swipt::Scheme s;
  return FromC(scheme, &s) ? swipt::ToString(s) : "unknown";
}

void swipt_params_default(swipt_params* out) {
  if (!out) return;
  const swipt::SystemParams d;
  *out = swipt_params{d.n_sc,     d.total_power_w, d.noise_w, d.peak_p_w,
                      d.peak_q_w, d.eh_min_w,      d.zeta};
}

swipt_status swipt_problem_create(const swipt_params* params, const double* h_i,
                                  const double* h_e, const double* h_j,
                                  const double* g_i, const double* g_e,
                                  swipt_problem** out) {
  if (!params || !h_i || !h_e || !h_j || !g_i || !g_e || !out)
    return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    auto prob = std::make_unique<swipt_problem>();
    swipt::SystemParams& p = prob->params;
    p.n_sc = params->n_sc;
    p.total_power_w = params->total_power_w;
    p.noise_w = params->noise_w;
    p.peak_p_w = params->peak_p_w;
    p.peak_q_w = params->peak_q_w;
    p.eh_min_w = params->eh_min_w;
    p.zeta = params->zeta;
    p.Validate();
    const size_t n = params->n_sc;
    prob->channel = swipt::ChannelState{{h_i, h_i + n}, {h_e, h_e + n},
                                        {h_j, h_j + n}, {g_i, g_i + n},
                                        {g_e, g_e + n}};
    prob->channel.Validate(n);
    *out = prob.release();
    return SWIPT_OK;
  });
}

void swipt_problem_free(swipt_problem* prob) { delete prob; }

swipt_status swipt_problem_solve(const swipt_problem* prob,
                                 swipt_scheme scheme, double* p_out,
                                 double* q_out, swipt_solution* out) {
  if (!prob || !out) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "null argument");
  swipt::Scheme s;
  if (!FromC(scheme, &s)) return Fail(SWIPT_ERR_INVALID_ARGUMENT, "bad scheme");
  return Guard([&] {
    swipt::PowerAllocation alloc;
    swipt_solution sol{};
    switch (s) {
      case swipt::Scheme::kProposed: {
        swipt::SolveReport rep = swipt::ellipsoid_solve(prob->channel, prob->params);
        sol.iterations = rep.iterations;
        sol.dual_bound = rep.dual_bound;
        sol.gap = rep.gap;
        alloc = std::move(rep.allocation);
        break;
      }
      case swipt::Scheme::kEpa:
        alloc = swipt::epa_allocate(prob->channel, prob->params).allocation;
        break;
      case swipt::Scheme::kNoJammer: {
        auto r = swipt::no_jammer_solve(prob->channel, prob->params);
        sol.iterations = r.iterations;
        alloc = std::move(r.allocation);
        break;
      }
      case swipt::Scheme::kNoCancelBcd: {
        auto r = swipt::bcd_nocancel_solve(prob->channel, prob->params);
        sol.iterations = r.iterations;
        alloc = std::move(r.allocation);
        break;
      }
    }
    sol.secrecy_rate_bits = alloc.secrecy_rate;
    sol.feasible = alloc.feasible ? 1 : 0;
    for (size_t k = 0; k < alloc.p.size(); ++k) {
      if (p_out) p_out[k] = alloc.p[k];
      if (q_out) q_out[k] = alloc.q[k];
    }
    *out = sol;
    return SWIPT_OK;
  });
}

}  // extern "C"
