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

#ifndef SWIPT_EXPERIMENT_H_
#define SWIPT_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swipt/baselines.h"
#include "swipt/channels.h"
#include "swipt/model.h"

namespace swipt {

// Thrown by parse_config. line() is 1-based, or 0 for whole-document errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class SweepKind { kQbar, kPower, kD1, kPowerD1 };

const char* ToString(SweepKind k);
// Accepts qbar, p, d1 and p_d1. Throws ConfigError otherwise.
SweepKind ParseSweepKind(std::string_view name);

struct ExperimentConfig {
  std::size_t n_sc = 64;
  double sigma2_dbm = -60.0;
  double ploss_exp = 3.0;
  double d_tx_ir_m = 20.0;
  double d_tx_er_m = 10.0;
  double er_angle_deg = 30.0;
  double d1_m = 10.0;
  double p_dbm = 30.0;
  double qbar_uw = 100.0;
  double peak_factor = 2.0;  // peak = peak_factor * P / N for Tx and jammer
  double zeta = 1.0;
  FadingKind fading = FadingKind::kRayleighUnitMean;
  double ref_gain_db = -1.5;
  std::uint64_t seed = 1;
  int trials = 10;
  SweepKind sweep = SweepKind::kQbar;
  std::vector<double> qbar_list{0, 100, 200, 300, 400, 500, 600, 700};
  std::vector<double> p_dbm_list{20, 22, 24, 26, 28, 30, 32, 34, 36};
  std::vector<double> d1_list{4, 10, 16};
  std::vector<Scheme> schemes{Scheme::kProposed, Scheme::kEpa,
                              Scheme::kNoJammer, Scheme::kNoCancelBcd};
  int max_iterations = 800;

  // Throws ConfigError (line 0) when an invariant is violated.
  void Validate() const;

  // System parameters for one point of the sweep.
  SystemParams ParamsFor(double p_dbm, double qbar_uw) const;
  GeometrySpec Geometry() const;
};

// Flat `key = value` document, one pair per line, `#` starts a comment.
// Unknown keys and malformed or non-numeric values are rejected with the
// offending line number. Missing keys keep their defaults.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

struct ResultRow {
  std::string sweep_name;
  double sweep_value = 0.0;
  int trial = 0;
  Scheme scheme = Scheme::kProposed;
  double secrecy_rate_bits = 0.0;  // 0 when infeasible
  bool feasible = false;
  int iterations = 0;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
  FadingKind fading = FadingKind::kRayleighUnitMean;
};

// One point of a sweep, with the channel every scheme sees.
struct SweepPoint {
  std::string sweep_name;
  double sweep_value = 0.0;
  double p_dbm = 0.0;
  double qbar_uw = 0.0;
  double d1_m = 0.0;
};

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg);

// Channel draw for a sweep point and trial; identical for every scheme.
ChannelState draw_channel(const ExperimentConfig& cfg, const SweepPoint& pt,
                          int trial);

struct RunOptions {
  // Worker threads; 0 means SWIPT_THREADS if set, else hardware concurrency.
  int threads = 0;
};

// Rows ordered by (sweep point, trial, scheme). Solver infeasibility is
// recorded in the row and never aborts the sweep.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg,
                                      const RunOptions& opts = {});

// Solves one scheme on one channel draw.
ResultRow solve_scheme(Scheme scheme, const ChannelState& ch,
                       const SystemParams& params, int max_iterations);

inline constexpr std::string_view kCsvHeader =
    "sweep_name,sweep_value,trial,scheme,secrecy_rate_bits,feasible,"
    "iterations,runtime_ms,seed,fading";

std::string to_csv(const std::vector<ResultRow>& rows);
// Throws std::runtime_error when the file cannot be written, and
// std::invalid_argument for an empty row set.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);
// Inverse of to_csv. Throws std::runtime_error on malformed input.
std::vector<ResultRow> parse_csv(std::string_view text);
std::vector<ResultRow> read_csv(const std::string& path);

struct AggregateRow {
  std::string sweep_name;
  double sweep_value = 0.0;
  Scheme scheme = Scheme::kProposed;
  int trials = 0;
  double mean_rate = 0.0;
  double ci_half_width = 0.0;  // 1.96 * sample sd / sqrt(trials)
  double feasible_fraction = 0.0;
};

// Mean over trials per (sweep point, scheme), infeasible rows counting 0.
std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows);

Scheme ParseScheme(std::string_view name);

}  // namespace swipt

#endif  // SWIPT_EXPERIMENT_H_
