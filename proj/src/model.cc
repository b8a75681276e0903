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

#include "swipt/model.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swipt {
namespace {

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

bool AllFiniteNonNegative(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x) && x >= 0.0; });
}

}  // namespace

void SystemParams::Validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (n_sc < 1) throw std::invalid_argument("n_sc must be >= 1");
  if (!positive(total_power_w))
    throw std::invalid_argument("total power must be > 0");
  if (!positive(noise_w)) throw std::invalid_argument("noise must be > 0");
  if (!positive(peak_p_w) || !positive(peak_q_w))
    throw std::invalid_argument("peak powers must be > 0");
  if (!std::isfinite(eh_min_w) || eh_min_w < 0.0)
    throw std::invalid_argument("harvested-power requirement must be >= 0");
  if (!(zeta > 0.0 && zeta <= 1.0))
    throw std::invalid_argument("zeta must lie in (0, 1]");
  if (!positive(ploss_exp)) throw std::invalid_argument("ploss_exp must be > 0");
  if (!positive(ref_gain)) throw std::invalid_argument("ref_gain must be > 0");
}

void ChannelState::Validate(std::size_t n_sc) const {
  for (const auto* v : {&h_i, &h_e, &h_j, &g_i, &g_e}) {
    if (v->size() != n_sc)
      throw std::invalid_argument("channel array length " +
                                  std::to_string(v->size()) + " != n_sc " +
                                  std::to_string(n_sc));
    if (!AllFiniteNonNegative(*v))
      throw std::invalid_argument("channel gains must be finite and >= 0");
  }
}

bool DualPoint::IsValid() const {
  return std::isfinite(lambda) && std::isfinite(beta) && std::isfinite(mu) &&
         lambda >= 0.0 && beta >= 0.0 && mu >= 0.0;
}

ScSnapshot ScSnapshot::Make(double h_i, double h_e, double h_j, double g_i,
                            double g_e, double noise_w, double zeta) {
  ScSnapshot sc{h_i, h_e, h_j, g_i, g_e, noise_w, zeta, 0.0, false};
  const Threshold a = threshold_A(sc);
  sc.a_threshold = a.value;
  sc.degenerate = a.degenerate;
  return sc;
}

ScSnapshot SnapshotAt(const ChannelState& ch, const SystemParams& params,
                      std::size_t n) {
  return ScSnapshot::Make(ch.h_i[n], ch.h_e[n], ch.h_j[n], ch.g_i[n],
                          ch.g_e[n], params.noise_w, params.zeta);
}

bool ConstraintSlacks::Satisfied(const SystemParams& params,
                                 double rel_tol) const {
  return power >= -rel_tol * params.total_power_w &&
         jammer >= -1e-3 * rel_tol &&
         eh >= -rel_tol * std::max(params.eh_min_w, params.noise_w);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

Threshold threshold_A(const ScSnapshot& sc) {
  if (sc.h_e <= sc.h_i) {
    // Bracket is non-positive; also covers h_i = h_e = 0, where no secrecy is
    // possible but the IR is not worse off than the ER.
    return {0.0, sc.h_i <= 0.0};
  }
  if (sc.h_i <= 0.0 || sc.g_e <= 0.0) return {0.0, true};
  return {sc.noise_w * (sc.h_e - sc.h_i) / (sc.h_i * sc.g_e), false};
}

ScRates sc_rates(double p, double q, const ScSnapshot& sc) {
  ScRates out;
  out.r = std::log1p(p * sc.h_i / sc.noise_w) * kInvLn2;
  out.r_e = std::log1p(p * sc.h_e / (sc.noise_w + q * sc.g_e)) * kInvLn2;
  if (!sc.degenerate && q >= sc.a_threshold)
    out.secrecy = std::max(0.0, out.r - out.r_e);
  return out;
}

ScRates sc_rates_no_cancel(double p, double q, const ScSnapshot& sc) {
  ScRates out;
  out.r = std::log1p(p * sc.h_i / (sc.noise_w + q * sc.g_i)) * kInvLn2;
  out.r_e = std::log1p(p * sc.h_e / (sc.noise_w + q * sc.g_e)) * kInvLn2;
  out.secrecy = std::max(0.0, out.r - out.r_e);
  return out;
}

ConstraintSlacks eval_constraints(const PowerAllocation& alloc,
                                  const ChannelState& ch,
                                  const SystemParams& params) {
  const std::size_t n = ch.size();
  if (alloc.p.size() != n || alloc.q.size() != n)
    throw std::invalid_argument("allocation length does not match channel");
  double sum_p = 0.0, sum_q = 0.0, budget = 0.0, harvested = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_p += alloc.p[k];
    sum_q += alloc.q[k];
    budget += alloc.p[k] * ch.h_j[k];
    harvested += alloc.p[k] * ch.h_e[k] + alloc.q[k] * ch.g_e[k];
  }
  return {params.total_power_w - sum_p, params.zeta * budget - sum_q,
          harvested - params.eh_min_w};
}

bool is_feasible(const PowerAllocation& alloc, const ChannelState& ch,
                 const SystemParams& params) {
  const double box_tol = 1e-12;
  for (std::size_t k = 0; k < alloc.p.size(); ++k) {
    if (alloc.p[k] < 0.0 || alloc.p[k] > params.peak_p_w * (1 + box_tol))
      return false;
    if (alloc.q[k] < 0.0 || alloc.q[k] > params.peak_q_w * (1 + box_tol))
      return false;
  }
  return eval_constraints(alloc, ch, params).Satisfied(params);
}

double total_secrecy_rate(std::span<const double> p, std::span<const double> q,
                          const ChannelState& ch, const SystemParams& params) {
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    total += sc_rates(p[k], q[k], SnapshotAt(ch, params, k)).secrecy;
  return total;
}

double total_secrecy_rate_no_cancel(std::span<const double> p,
                                    std::span<const double> q,
                                    const ChannelState& ch,
                                    const SystemParams& params) {
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    total += sc_rates_no_cancel(p[k], q[k], SnapshotAt(ch, params, k)).secrecy;
  return total;
}

double sc_lagrangian(double p, double q, const ScSnapshot& sc,
                     const DualPoint& nu) {
  return sc_rates(p, q, sc).secrecy - nu.lambda * p +
         nu.beta * (sc.zeta * p * sc.h_j - q) +
         nu.mu * (p * sc.h_e + q * sc.g_e);
}

double f1(double p, double q, const ScSnapshot& sc, const DualPoint& nu) {
  const double s = sc.noise_w;
  return kInvLn2 * (sc.h_i / (s + p * sc.h_i) -
                    sc.h_e / (s + q * sc.g_e + p * sc.h_e)) -
         nu.lambda + nu.beta * sc.zeta * sc.h_j + nu.mu * sc.h_e;
}

double f2(double p, double q, const ScSnapshot& sc, const DualPoint& nu) {
  const double jam = sc.noise_w + q * sc.g_e;
  return kInvLn2 * p * sc.h_e * sc.g_e / ((jam + p * sc.h_e) * jam) - nu.beta +
         nu.mu * sc.g_e;
}

}  // namespace swipt
