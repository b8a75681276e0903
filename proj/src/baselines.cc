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

#include "swipt/baselines.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>

#include "swipt/ellipsoid.h"
#include "swipt/scan.h"

namespace swipt {
namespace {

struct BlockEval {
  double value = 0.0;
  std::vector<double> subgradient;
  PowerAllocation alloc;
};

struct BlockOutcome {
  PowerAllocation best;
  bool found = false;
  int iterations = 0;
};

// Dual decomposition for one block: ellipsoid over the block's multipliers,
// keeping the best feasible repaired primal.
BlockOutcome SolveBlock(
    int dim, double radius, const SolverConfig& cfg,
    const std::function<BlockEval(std::span<const double>)>& evaluate,
    const std::function<PowerAllocation(const PowerAllocation&)>& repair) {
  BlockOutcome out;
  auto oracle = [&](std::span<const double> x) {
    BlockEval ev = evaluate(x);
    PowerAllocation fixed = repair(ev.alloc);
    if (fixed.feasible &&
        (!out.found || fixed.secrecy_rate > out.best.secrecy_rate)) {
      out.found = true;
      out.best = std::move(fixed);
    }
    return DualEval{ev.value, std::move(ev.subgradient)};
  };
  EllipsoidConfig ecfg;
  ecfg.max_iterations = cfg.max_iterations;
  ecfg.rel_tol = cfg.rel_tol;
  const std::vector<double> center(dim, 0.5 * radius);
  out.iterations =
      minimize_on_orthant(EllipsoidState(center, radius), ecfg, oracle)
          .iterations;
  return out;
}

double Sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Most harvested power reachable by the Tx alone.
double TxOnlyHarvestBound(const ChannelState& ch, const SystemParams& params) {
  std::vector<double> w = ch.h_e;
  std::sort(w.begin(), w.end(), std::greater<>());
  double left = params.total_power_w, total = 0.0;
  for (double x : w) {
    const double p = std::min(left, params.peak_p_w);
    total += p * x;
    left -= p;
    if (left <= 0.0) break;
  }
  return total;
}

BaselineResult Infeasible(Scheme scheme, std::size_t n) {
  BaselineResult r;
  r.scheme = scheme;
  r.allocation = PowerAllocation::Zeros(n);
  return r;
}

}  // namespace

const char* ToString(Scheme s) {
  switch (s) {
    case Scheme::kProposed:
      return "proposed";
    case Scheme::kEpa:
      return "epa";
    case Scheme::kNoJammer:
      return "nojammer";
    case Scheme::kNoCancelBcd:
      return "nocancel";
  }
  return "unknown";
}

BaselineResult epa_allocate(const ChannelState& ch, const SystemParams& params) {
  params.Validate();
  ch.Validate(params.n_sc);
  const std::size_t n = ch.size();
  BaselineResult r;
  r.scheme = Scheme::kEpa;
  r.allocation = PowerAllocation::Zeros(n);
  auto& a = r.allocation;
  std::fill(a.p.begin(), a.p.end(),
            std::min(params.total_power_w / static_cast<double>(n),
                     params.peak_p_w));
  const double budget = params.zeta * Dot(a.p, ch.h_j);
  std::fill(a.q.begin(), a.q.end(),
            std::min(budget / static_cast<double>(n), params.peak_q_w));
  a.feasible = is_feasible(a, ch, params);
  a.secrecy_rate = total_secrecy_rate(a.p, a.q, ch, params);
  return r;
}

BaselineResult no_jammer_solve(const ChannelState& ch,
                               const SystemParams& params,
                               const SolverConfig& cfg) {
  params.Validate();
  ch.Validate(params.n_sc);
  const std::size_t n = ch.size();
  if (TxOnlyHarvestBound(ch, params) < params.eh_min_w)
    return Infeasible(Scheme::kNoJammer, n);

  std::vector<ScSnapshot> scs(n);
  for (std::size_t k = 0; k < n; ++k) scs[k] = SnapshotAt(ch, params, k);

  auto evaluate = [&](std::span<const double> x) {
    const double lambda = x[0], mu = x[1];
    BlockEval ev;
    ev.alloc = PowerAllocation::Zeros(n);
    double value = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const ScSnapshot& sc = scs[k];
      const auto best = scan_maximize(
          [&](double p) {
            return sc_rates_no_cancel(p, 0.0, sc).secrecy - lambda * p +
                   mu * p * sc.h_e;
          },
          0.0, params.peak_p_w);
      ev.alloc.p[k] = best.x;
      value += best.value;
    }
    ev.value = value + lambda * params.total_power_w - mu * params.eh_min_w;
    ev.subgradient = {params.total_power_w - Sum(ev.alloc.p),
                      Dot(ev.alloc.p, ch.h_e) - params.eh_min_w};
    return ev;
  };
  RepairOptions opts;
  opts.allow_jamming = false;
  auto repair = [&](const PowerAllocation& a) {
    return repair_primal(a, ch, params, opts);
  };

  const BlockOutcome out = SolveBlock(2, initial_dual_radius(ch, params, cfg),
                                      cfg, evaluate, repair);
  BaselineResult r = Infeasible(Scheme::kNoJammer, n);
  if (out.found) r.allocation = out.best;
  r.iterations = out.iterations;
  return r;
}

BaselineResult bcd_nocancel_solve(const ChannelState& ch,
                                  const SystemParams& params,
                                  const BcdConfig& cfg) {
  params.Validate();
  ch.Validate(params.n_sc);
  const std::size_t n = ch.size();
  if (max_harvest_upper_bound(ch, params) < params.eh_min_w)
    return Infeasible(Scheme::kNoCancelBcd, n);

  RepairOptions p_block;
  p_block.adjust_q = false;
  p_block.cancel_at_ir = false;
  RepairOptions q_block;
  q_block.adjust_p = false;
  q_block.cancel_at_ir = false;
  RepairOptions both;
  both.cancel_at_ir = false;

  PowerAllocation cur = cfg.start == BcdStart::kEqualPower
                            ? epa_allocate(ch, params).allocation
                            : no_jammer_solve(ch, params, cfg.block).allocation;
  cur = repair_primal(cur, ch, params, both);
  if (!cur.feasible) return Infeasible(Scheme::kNoCancelBcd, n);

  std::vector<ScSnapshot> scs(n);
  for (std::size_t k = 0; k < n; ++k) scs[k] = SnapshotAt(ch, params, k);
  const double radius = initial_dual_radius(ch, params, cfg.block);

  BaselineResult r;
  r.scheme = Scheme::kNoCancelBcd;
  r.objective_history.push_back(cur.secrecy_rate);

  for (int round = 0; round < cfg.max_rounds; ++round) {
    const double before = cur.secrecy_rate;

    // Block 1: Tx powers with the jammer powers held fixed.
    {
      const double sum_q = Sum(cur.q);
      const double q_harvest = Dot(cur.q, ch.g_e);
      auto evaluate = [&](std::span<const double> x) {
        const double lambda = x[0], beta = x[1], mu = x[2];
        BlockEval ev;
        ev.alloc = PowerAllocation::Zeros(n);
        ev.alloc.q = cur.q;
        double value = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const ScSnapshot& sc = scs[k];
          const double qk = cur.q[k];
          const double gain = -lambda + beta * sc.zeta * sc.h_j + mu * sc.h_e;
          const auto best = scan_maximize(
              [&](double p) {
                return sc_rates_no_cancel(p, qk, sc).secrecy + gain * p;
              },
              0.0, params.peak_p_w);
          ev.alloc.p[k] = best.x;
          value += best.value;
        }
        ev.value = value + lambda * params.total_power_w - beta * sum_q +
                   mu * (q_harvest - params.eh_min_w);
        ev.subgradient = {
            params.total_power_w - Sum(ev.alloc.p),
            params.zeta * Dot(ev.alloc.p, ch.h_j) - sum_q,
            Dot(ev.alloc.p, ch.h_e) + q_harvest - params.eh_min_w};
        return ev;
      };
      const BlockOutcome out = SolveBlock(
          3, radius, cfg.block, evaluate, [&](const PowerAllocation& a) {
            return repair_primal(a, ch, params, p_block);
          });
      if (out.found && out.best.secrecy_rate > cur.secrecy_rate)
        cur = out.best;
    }

    // Block 2: jammer powers with the Tx powers held fixed.
    {
      const double budget = params.zeta * Dot(cur.p, ch.h_j);
      const double p_harvest = Dot(cur.p, ch.h_e);
      auto evaluate = [&](std::span<const double> x) {
        const double beta = x[0], mu = x[1];
        BlockEval ev;
        ev.alloc = PowerAllocation::Zeros(n);
        ev.alloc.p = cur.p;
        double value = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const ScSnapshot& sc = scs[k];
          const double pk = cur.p[k];
          const double gain = -beta + mu * sc.g_e;
          const auto best = scan_maximize(
              [&](double q) {
                return sc_rates_no_cancel(pk, q, sc).secrecy + gain * q;
              },
              0.0, params.peak_q_w);
          ev.alloc.q[k] = best.x;
          value += best.value;
        }
        ev.value = value + beta * budget + mu * (p_harvest - params.eh_min_w);
        ev.subgradient = {budget - Sum(ev.alloc.q),
                          p_harvest + Dot(ev.alloc.q, ch.g_e) -
                              params.eh_min_w};
        return ev;
      };
      const BlockOutcome out = SolveBlock(
          2, radius, cfg.block, evaluate, [&](const PowerAllocation& a) {
            return repair_primal(a, ch, params, q_block);
          });
      if (out.found && out.best.secrecy_rate > cur.secrecy_rate)
        cur = out.best;
    }

    r.iterations = round + 1;
    r.objective_history.push_back(cur.secrecy_rate);
    if (cur.secrecy_rate - before < cfg.min_improvement) break;
  }
  r.allocation = cur;
  return r;
}

}  // namespace swipt
