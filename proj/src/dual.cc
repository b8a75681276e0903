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

#include "swipt/dual.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "swipt/ellipsoid.h"

namespace swipt {

const char* ToString(SolveStatus s) {
  switch (s) {
    case SolveStatus::kConverged:
      return "converged";
    case SolveStatus::kIterationCap:
      return "iteration_cap";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

DualEvaluation dual_value_and_subgrad(const DualPoint& nu,
                                      const ChannelState& ch,
                                      const SystemParams& params) {
  const std::size_t n = ch.size();
  const ScBox box = ScBox::From(params);
  DualEvaluation ev;
  ev.alloc = PowerAllocation::Zeros(n);
  ev.case_labels.resize(n);
  double value = 0.0, sum_p = 0.0, sum_q = 0.0, budget = 0.0, harvest = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const ScSnapshot sc = SnapshotAt(ch, params, k);
    const ScSolution s = solve_sc(sc, nu, box);
    ev.alloc.p[k] = s.p;
    ev.alloc.q[k] = s.q;
    ev.case_labels[k] = s.case_label;
    value += s.value;
    sum_p += s.p;
    sum_q += s.q;
    budget += s.p * ch.h_j[k];
    harvest += s.p * ch.h_e[k] + s.q * ch.g_e[k];
    ev.alloc.secrecy_rate += sc_rates(s.p, s.q, sc).secrecy;
  }
  ev.value = value + nu.lambda * params.total_power_w - nu.mu * params.eh_min_w;
  ev.subgradient = {params.total_power_w - sum_p,
                    params.zeta * budget - sum_q, harvest - params.eh_min_w};
  ev.alloc.feasible = is_feasible(ev.alloc, ch, params);
  return ev;
}

double max_harvest_upper_bound(const ChannelState& ch,
                               const SystemParams& params) {
  // Jamming adds at most max(g_e) per watt, and the jammer never has more
  // than zeta * sum p h_j watts, so each Tx watt on subcarrier k is worth at
  // most h_e + zeta h_j max(g_e). Fill the best subcarriers first.
  const std::size_t n = ch.size();
  const double g_max =
      n ? *std::max_element(ch.g_e.begin(), ch.g_e.end()) : 0.0;
  std::vector<double> worth(n);
  for (std::size_t k = 0; k < n; ++k)
    worth[k] = ch.h_e[k] + params.zeta * ch.h_j[k] * g_max;
  std::sort(worth.begin(), worth.end(), std::greater<>());
  double left = params.total_power_w;
  double total = 0.0;
  for (double w : worth) {
    const double p = std::min(left, params.peak_p_w);
    total += p * w;
    left -= p;
    if (left <= 0.0) break;
  }
  return total;
}

double initial_dual_radius(const ChannelState& ch, const SystemParams& params,
                           const SolverConfig& cfg) {
  if (cfg.init_radius) return *cfg.init_radius;
  // Largest possible derivative of a per-subcarrier rate, scaled up.
  double h_max = 0.0;
  for (const auto* v : {&ch.h_i, &ch.h_e, &ch.h_j, &ch.g_i, &ch.g_e})
    for (double x : *v) h_max = std::max(h_max, x);
  return cfg.radius_scale * std::max(h_max, 1e-300) /
         (params.noise_w * std::numbers::ln2);
}

SolveReport ellipsoid_solve(const ChannelState& ch, const SystemParams& params,
                            const SolverConfig& cfg) {
  params.Validate();
  ch.Validate(params.n_sc);
  const std::size_t n = ch.size();

  SolveReport report;
  report.allocation = PowerAllocation::Zeros(n);
  if (max_harvest_upper_bound(ch, params) < params.eh_min_w) {
    report.status = SolveStatus::kInfeasible;
    return report;
  }

  const double radius = initial_dual_radius(ch, params, cfg);
  const std::array<double, 3> center{0.5 * radius, 0.5 * radius, 0.5 * radius};

  bool have_primal = false;
  double best_primal = 0.0;
  auto oracle = [&](std::span<const double> x) {
    const DualPoint nu{x[0], x[1], x[2]};
    DualEvaluation ev = dual_value_and_subgrad(nu, ch, params);
    for (std::string_view label : ev.case_labels)
      ++report.subproblem_case_histogram[std::string(label)];

    PowerAllocation repaired = repair_primal(ev.alloc, ch, params);
    if (repaired.feasible &&
        (!have_primal || repaired.secrecy_rate > best_primal)) {
      have_primal = true;
      best_primal = repaired.secrecy_rate;
      report.allocation = std::move(repaired);
    }
    if (cfg.record_history)
      report.best_primal_history.push_back(have_primal ? best_primal : 0.0);
    return DualEval{ev.value, {ev.subgradient.begin(), ev.subgradient.end()}};
  };

  EllipsoidConfig ecfg;
  ecfg.max_iterations = cfg.max_iterations;
  ecfg.rel_tol = cfg.rel_tol;
  ecfg.record_history = cfg.record_history;
  EllipsoidResult res =
      minimize_on_orthant(EllipsoidState(center, radius), ecfg, oracle);

  report.iterations = res.iterations;
  report.evaluations = res.evaluations;
  report.log_det_history = std::move(res.log_det_history);
  report.dual_value_history = std::move(res.value_history);
  if (!res.best_point.empty()) {
    report.duals = {res.best_point[0], res.best_point[1], res.best_point[2]};
    report.dual_bound = res.best_value;
  }
  if (!have_primal) {
    report.status = SolveStatus::kInfeasible;
    report.allocation.feasible = false;
    return report;
  }
  report.status =
      res.converged ? SolveStatus::kConverged : SolveStatus::kIterationCap;
  report.gap = report.dual_bound - report.allocation.secrecy_rate;
  return report;
}

}  // namespace swipt
