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

// swipt-solve: runs a Monte-Carlo sweep comparing the jointly optimized
// Tx/jammer power allocation with the baseline schemes and writes one CSV
// row per (sweep value, trial, scheme).

#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "swipt/swipt.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

int Report(swipt_status st) {
  std::fprintf(stderr, "swipt-solve: %s\n", swipt_last_error());
  switch (st) {
    case SWIPT_ERR_CONFIG:
    case SWIPT_ERR_INVALID_ARGUMENT:
      return kExitConfig;
    case SWIPT_ERR_IO:
      return kExitIo;
    default:
      return kExitInternal;
  }
}

void PrintSummary(const swipt_results* res) {
  swipt_summary* sum = nullptr;
  if (swipt_results_summarize(res, &sum) != SWIPT_OK) return;
  std::printf("%-16s %12s %-10s %7s %14s %12s %9s\n", "sweep", "value",
              "scheme", "trials", "mean_bits", "ci95", "feasible");
  for (size_t i = 0; i < swipt_summary_size(sum); ++i) {
    swipt_summary_row r;
    swipt_summary_get(sum, i, &r);
    std::printf("%-16s %12.6g %-10s %7d %14.6f %12.6f %9.3f\n", r.sweep_name,
                r.sweep_value, swipt_scheme_name(r.scheme), r.trials,
                r.mean_rate_bits, r.ci_half_width, r.feasible_fraction);
  }
  swipt_summary_free(sum);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Secrecy-rate power allocation with a wireless-powered cooperative "
      "jammer: Monte-Carlo scheme comparison"};
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string out_path = "results.csv";
  std::optional<std::string> sweep;
  std::string aggregate_path;
  bool quiet = false;

  app.add_option("--config", config_path, "key = value experiment config")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "override the fading seed");
  app.add_option("--trials", trials, "override the number of trials")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "output CSV path");
  app.add_option("--sweep", sweep, "sweep to run")
      ->check(CLI::IsMember({"qbar", "p", "d1", "p_d1"}));
  app.add_option("--aggregate", aggregate_path,
                 "summarize an existing results CSV and exit")
      ->excludes("--config");
  app.add_flag("-q,--quiet", quiet, "do not print the summary table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (!aggregate_path.empty()) {
    swipt_results* res = nullptr;
    if (swipt_status st = swipt_results_read_csv(aggregate_path.c_str(), &res);
        st != SWIPT_OK)
      return Report(st);
    PrintSummary(res);
    swipt_results_free(res);
    return 0;
  }
  if (config_path.empty()) {
    std::fprintf(stderr, "swipt-solve: --config is required\n");
    return kExitConfig;
  }

  swipt_config* cfg = nullptr;
  if (swipt_status st = swipt_config_load(config_path.c_str(), &cfg);
      st != SWIPT_OK)
    return Report(st);
  swipt_status st = SWIPT_OK;
  if (seed) st = swipt_config_set_seed(cfg, *seed);
  if (st == SWIPT_OK && trials) st = swipt_config_set_trials(cfg, *trials);
  if (st == SWIPT_OK && sweep) st = swipt_config_set_sweep(cfg, sweep->c_str());
  if (st != SWIPT_OK) {
    swipt_config_free(cfg);
    return Report(st);
  }

  swipt_results* res = nullptr;
  st = swipt_run_experiment(cfg, 0, &res);
  swipt_config_free(cfg);
  if (st != SWIPT_OK) return Report(st);

  st = swipt_results_write_csv(res, out_path.c_str());
  if (st != SWIPT_OK) {
    swipt_results_free(res);
    return Report(st);
  }
  if (!quiet) PrintSummary(res);
  std::fprintf(stderr, "wrote %zu rows to %s\n", swipt_results_size(res),
               out_path.c_str());
  swipt_results_free(res);
  return 0;
}
