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

#ifndef SWIPT_MODEL_H_
#define SWIPT_MODEL_H_

#include <cstddef>
#include <span>
#include <vector>

namespace swipt {

// Scenario constants. Every power is in watts; conversions from dBm/uW
// happen at the I/O boundary only.
struct SystemParams {
  std::size_t n_sc = 64;
  double total_power_w = 1.0;   // P
  double noise_w = 1e-9;        // per-subcarrier noise power
  double peak_p_w = 2.0 / 64;   // Tx per-subcarrier peak
  double peak_q_w = 2.0 / 64;   // jammer per-subcarrier peak
  double eh_min_w = 1e-4;       // minimum power harvested at the ER
  double zeta = 1.0;            // jammer energy-conversion efficiency
  double ploss_exp = 3.0;
  double ref_gain = 1.0;        // channel gain at 1 m

  // Throws std::invalid_argument when an invariant is violated.
  void Validate() const;
};

// Per-subcarrier channel power gains.
struct ChannelState {
  std::vector<double> h_i;  // Tx -> IR
  std::vector<double> h_e;  // Tx -> ER
  std::vector<double> h_j;  // Tx -> jammer
  std::vector<double> g_i;  // jammer -> IR
  std::vector<double> g_e;  // jammer -> ER

  std::size_t size() const { return h_i.size(); }
  void Validate(std::size_t n_sc) const;
  bool operator==(const ChannelState&) const = default;
};

struct PowerAllocation {
  std::vector<double> p;
  std::vector<double> q;
  double secrecy_rate = 0.0;  // bits/s/Hz summed over subcarriers
  bool feasible = false;

  static PowerAllocation Zeros(std::size_t n) {
    return PowerAllocation{std::vector<double>(n, 0.0),
                           std::vector<double>(n, 0.0), 0.0, false};
  }
};

struct DualPoint {
  double lambda = 0.0;  // total Tx power
  double beta = 0.0;    // jammer harvested-energy budget
  double mu = 0.0;      // ER minimum harvested power

  bool IsValid() const;
};

// The minimum jamming power for positive secrecy on one subcarrier. When the
// subcarrier can never carry secret bits (h_i = 0, or g_e = 0 while the
// eavesdropper hears better than the IR) `degenerate` is set and `value`
// carries no meaning.
struct Threshold {
  double value = 0.0;
  bool degenerate = false;
};

// Everything the per-subcarrier formulas need, with the threshold cached.
struct ScSnapshot {
  double h_i = 0.0;
  double h_e = 0.0;
  double h_j = 0.0;
  double g_i = 0.0;
  double g_e = 0.0;
  double noise_w = 1e-9;
  double zeta = 1.0;
  double a_threshold = 0.0;
  bool degenerate = false;

  // Builds a snapshot and fills the threshold fields.
  static ScSnapshot Make(double h_i, double h_e, double h_j, double g_i,
                         double g_e, double noise_w, double zeta = 1.0);
};

ScSnapshot SnapshotAt(const ChannelState& ch, const SystemParams& params,
                      std::size_t n);

struct ScRates {
  double r = 0.0;    // IR rate
  double r_e = 0.0;  // ER (eavesdropper) rate
  double secrecy = 0.0;
};

struct ConstraintSlacks {
  double power = 0.0;   // P - sum p
  double jammer = 0.0;  // zeta * sum p h_j - sum q
  double eh = 0.0;      // sum (p h_e + q g_e) - Qbar

  // All three slacks non-negative up to a relative tolerance.
  bool Satisfied(const SystemParams& params, double rel_tol = 1e-9) const;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

Threshold threshold_A(const ScSnapshot& sc);

ScRates sc_rates(double p, double q, const ScSnapshot& sc);

// Secrecy rate when the jamming signal also interferes at the IR.
ScRates sc_rates_no_cancel(double p, double q, const ScSnapshot& sc);

// Throws std::invalid_argument on array length mismatch.
ConstraintSlacks eval_constraints(const PowerAllocation& alloc,
                                  const ChannelState& ch,
                                  const SystemParams& params);

// True when the box constraints hold and all slacks are non-negative.
bool is_feasible(const PowerAllocation& alloc, const ChannelState& ch,
                 const SystemParams& params);

// Sum over subcarriers of the secrecy rate with IR-side jamming cancellation.
double total_secrecy_rate(std::span<const double> p, std::span<const double> q,
                          const ChannelState& ch, const SystemParams& params);

double total_secrecy_rate_no_cancel(std::span<const double> p,
                                    std::span<const double> q,
                                    const ChannelState& ch,
                                    const SystemParams& params);

// Per-subcarrier Lagrangian
//   R - lambda p + beta (zeta p h_j - q) + mu (p h_e + q g_e).
double sc_lagrangian(double p, double q, const ScSnapshot& sc,
                     const DualPoint& nu);

// Partial derivatives of the Lagrangian in p and q on the positive-secrecy
// branch (q >= A).
double f1(double p, double q, const ScSnapshot& sc, const DualPoint& nu);
double f2(double p, double q, const ScSnapshot& sc, const DualPoint& nu);

}  // namespace swipt

#endif  // SWIPT_MODEL_H_
