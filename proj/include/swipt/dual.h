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

#ifndef SWIPT_DUAL_H_
#define SWIPT_DUAL_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swipt/model.h"
#include "swipt/subproblem.h"

namespace swipt {

struct DualEvaluation {
  double value = 0.0;                 // g(lambda, beta, mu)
  std::array<double, 3> subgradient;  // constraint slacks at the maximizer
  PowerAllocation alloc;              // per-subcarrier maximizers
  std::vector<std::string_view> case_labels;
};

// Solves all N per-subcarrier problems for fixed multipliers.
DualEvaluation dual_value_and_subgrad(const DualPoint& nu,
                                      const ChannelState& ch,
                                      const SystemParams& params);

struct SolverConfig {
  int max_iterations = 800;
  double rel_tol = 1e-4;
  // Initial ball radius is radius_scale * h_max / (noise * ln 2) unless
  // init_radius is given.
  double radius_scale = 10.0;
  std::optional<double> init_radius;
  bool record_history = false;
};

enum class SolveStatus { kConverged, kIterationCap, kInfeasible };

const char* ToString(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  PowerAllocation allocation;  // best feasible repaired primal
  double dual_bound = 0.0;     // min dual value observed
  double gap = 0.0;            // dual_bound - allocation.secrecy_rate
  DualPoint duals;             // multipliers attaining dual_bound
  int iterations = 0;
  int evaluations = 0;
  std::map<std::string, int> subproblem_case_histogram;

  // Filled only with SolverConfig::record_history.
  std::vector<double> log_det_history;
  std::vector<double> dual_value_history;
  std::vector<double> best_primal_history;

  double relative_gap() const {
    return dual_bound > 0.0 ? gap / dual_bound : gap;
  }
};

// Upper bound on the power the ER can harvest under the total-power, peak
// and jammer-budget constraints. Below Qbar the problem is infeasible.
double max_harvest_upper_bound(const ChannelState& ch,
                               const SystemParams& params);

// Radius of the initial ellipsoid ball.
double initial_dual_radius(const ChannelState& ch, const SystemParams& params,
                           const SolverConfig& cfg);

// Minimizes the dual function with the central-cut ellipsoid method and
// keeps the best feasible repaired primal seen along the way.
SolveReport ellipsoid_solve(const ChannelState& ch, const SystemParams& params,
                            const SolverConfig& cfg = {});

struct RepairOptions {
  bool adjust_p = true;
  bool adjust_q = true;
  bool allow_jamming = true;  // false forces q = 0 (no-jammer scheme)
  bool cancel_at_ir = true;   // rate model used for the reported rate
};

// Projects an allocation that satisfies the box constraints onto the
// feasible set: scales down total Tx power, then jammer power, then raises
// harvested power greedily. Sets `feasible` and recomputes `secrecy_rate`.
PowerAllocation repair_primal(const PowerAllocation& alloc,
                              const ChannelState& ch,
                              const SystemParams& params,
                              const RepairOptions& opts = {});

}  // namespace swipt

#endif  // SWIPT_DUAL_H_
