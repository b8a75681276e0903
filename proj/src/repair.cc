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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "swipt/dual.h"

namespace swipt {
namespace {

double Sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

std::vector<std::size_t> OrderBy(std::span<const double> key, bool descending) {
  std::vector<std::size_t> idx(key.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return descending ? key[a] > key[b] : key[a] < key[b];
  });
  return idx;
}

void ScaleDownTo(std::vector<double>& x, double cap) {
  const double total = Sum(x);
  if (total <= cap) return;
  const double f = total > 0.0 ? std::max(0.0, cap) / total : 0.0;
  for (double& v : x) v *= f;
}

// Spends the unused share of `cap` on entries in `order` to raise
// sum_k w_k x_k by `deficit`. Returns what is left of the deficit.
double RaiseWithSlack(std::vector<double>& x, double cap, double box,
                      const std::vector<double>& w,
                      const std::vector<std::size_t>& order, double deficit) {
  double slack = cap - Sum(x);
  for (std::size_t k : order) {
    if (deficit <= 0.0 || slack <= 0.0) break;
    if (w[k] <= 0.0) continue;
    const double delta = std::min({box - x[k], slack, deficit / w[k]});
    if (delta <= 0.0) continue;
    x[k] += delta;
    slack -= delta;
    deficit -= delta * w[k];
  }
  return deficit;
}

// Moves mass from the lowest-weight entries to the highest-weight ones,
// keeping sum x fixed, until sum_k w_k x_k has grown by `deficit`.
double RaiseByShifting(std::vector<double>& x, double box,
                       const std::vector<double>& w, double deficit) {
  const auto up = OrderBy(w, /*descending=*/true);
  std::size_t r = 0;
  std::size_t d = up.size();
  while (deficit > 0.0 && r < d) {
    const std::size_t rk = up[r];
    const std::size_t dk = up[d - 1];
    const double dw = w[rk] - w[dk];
    if (dw <= 0.0) break;
    if (x[rk] >= box) {
      ++r;
      continue;
    }
    if (x[dk] <= 0.0) {
      --d;
      continue;
    }
    const double delta = std::min({box - x[rk], x[dk], deficit / dw});
    x[rk] += delta;
    x[dk] -= delta;
    deficit -= delta * dw;
  }
  return deficit;
}

struct Harvest {
  double budget;
  double sum_q;
  double deficit;
};

Harvest Measure(const std::vector<double>& p, const std::vector<double>& q,
                const ChannelState& ch, const SystemParams& params) {
  return {params.zeta * Dot(p, ch.h_j), Sum(q),
          params.eh_min_w - Dot(p, ch.h_e) - Dot(q, ch.g_e)};
}

}  // namespace

PowerAllocation repair_primal(const PowerAllocation& alloc,
                              const ChannelState& ch,
                              const SystemParams& params,
                              const RepairOptions& opts) {
  const std::size_t n = ch.size();
  PowerAllocation out = alloc;
  if (!opts.allow_jamming) std::fill(out.q.begin(), out.q.end(), 0.0);
  auto finish = [&](PowerAllocation& a) {
    a.feasible = is_feasible(a, ch, params);
    a.secrecy_rate = opts.cancel_at_ir
                         ? total_secrecy_rate(a.p, a.q, ch, params)
                         : total_secrecy_rate_no_cancel(a.p, a.q, ch, params);
    return a;
  };
  if (is_feasible(out, ch, params)) return finish(out);

  for (std::size_t k = 0; k < n; ++k) {
    out.p[k] = std::clamp(out.p[k], 0.0, params.peak_p_w);
    out.q[k] = std::clamp(out.q[k], 0.0, params.peak_q_w);
  }
  const bool move_q = opts.adjust_q && opts.allow_jamming;

  std::vector<double> zeta_hj(n);
  for (std::size_t k = 0; k < n; ++k) zeta_hj[k] = params.zeta * ch.h_j[k];
  const auto by_ge = OrderBy(ch.g_e, /*descending=*/true);

  for (int round = 0; round < 8; ++round) {
    if (opts.adjust_p) ScaleDownTo(out.p, params.total_power_w);

    Harvest h = Measure(out.p, out.q, ch, params);
    if (h.sum_q > h.budget) {
      if (move_q) {
        ScaleDownTo(out.q, h.budget);
      } else if (opts.adjust_p) {
        const double rest =
            RaiseWithSlack(out.p, params.total_power_w, params.peak_p_w,
                           zeta_hj, OrderBy(zeta_hj, true), h.sum_q - h.budget);
        if (rest > 0.0)
          RaiseByShifting(out.p, params.peak_p_w, zeta_hj, rest);
      }
      h = Measure(out.p, out.q, ch, params);
    }

    if (h.deficit > 0.0) {
      double deficit = h.deficit * (1.0 + 1e-12);
      if (move_q)
        deficit = RaiseWithSlack(out.q, h.budget, params.peak_q_w, ch.g_e,
                                 by_ge, deficit);
      if (deficit > 0.0 && opts.adjust_p) {
        // Cheapest harvested power first: harvest gain per unit of secrecy
        // rate lost by adding Tx power.
        std::vector<double> priority(n);
        for (std::size_t k = 0; k < n; ++k) {
          const ScSnapshot sc = SnapshotAt(ch, params, k);
          const double eps = 1e-6 * out.p[k] + 1e-15;
          const double loss = sc_rates(out.p[k], out.q[k], sc).secrecy -
                              sc_rates(out.p[k] + eps, out.q[k], sc).secrecy;
          priority[k] = ch.h_e[k] / std::max(loss / eps, 1e-12);
        }
        deficit = RaiseWithSlack(out.p, params.total_power_w, params.peak_p_w,
                                 ch.h_e, OrderBy(priority, true), deficit);
        if (deficit > 0.0)
          deficit = RaiseByShifting(out.p, params.peak_p_w, ch.h_e, deficit);
      }
      if (deficit > 0.0 && move_q)
        RaiseByShifting(out.q, params.peak_q_w, ch.g_e, deficit);
    }
    if (is_feasible(out, ch, params)) break;
  }
  return finish(out);
}

}  // namespace swipt
