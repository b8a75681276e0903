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

#include "swipt/subproblem.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swipt {
namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1 / golden ratio

// Bisection for a root of a function that is increasing (sign = +1) or
// decreasing (sign = -1) on [lo, hi], with a sign change already bracketed.
template <class Fn>
double Bisect(Fn&& fn, double lo, double hi, double tol, double sign) {
  for (int it = 0; it < kMaxBisectionIterations && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sign * fn(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void CheckInterval(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("invalid interval: lo > hi");
}

ScSolution Positive(double p, double q, const ScSnapshot& sc,
                    const DualPoint& nu, std::string_view label) {
  return {p, q, sc_lagrangian(p, q, sc, nu), Branch::kPositiveSecrecy, label};
}

const ScSolution& Better(const ScSolution& a, const ScSolution& b) {
  return b.value > a.value ? b : a;
}

// p = 0 arm: the Lagrangian is q (-beta + mu g_e) and the best q is one of
// the interval ends.
double ZeroPowerJamming(const ScSnapshot& sc, const DualPoint& nu, double lo,
                        double hi) {
  return -nu.beta + nu.mu * sc.g_e < 0.0 ? lo : hi;
}

}  // namespace

double chi_q_of_f2(double p, const ScSnapshot& sc, const DualPoint& nu,
                   double lo, double hi, double tol) {
  CheckInterval(lo, hi);
  if (f2(p, lo, sc, nu) <= 0.0) return lo;
  if (f2(p, hi, sc, nu) >= 0.0) return hi;
  return Bisect([&](double q) { return f2(p, q, sc, nu); }, lo, hi, tol, -1.0);
}

double chi_q_of_f1(double p, const ScSnapshot& sc, const DualPoint& nu,
                   double lo, double hi, double tol) {
  CheckInterval(lo, hi);
  if (f1(p, lo, sc, nu) >= 0.0) return lo;
  if (f1(p, hi, sc, nu) <= 0.0) return hi;
  return Bisect([&](double q) { return f1(p, q, sc, nu); }, lo, hi, tol, 1.0);
}

double chi_p_of_f1(double q, const ScSnapshot& sc, const DualPoint& nu,
                   const ScBox& box) {
  if (f1(0.0, q, sc, nu) <= 0.0) return 0.0;
  if (f1(box.peak_p, q, sc, nu) >= 0.0) return box.peak_p;
  // Newton steps inside a shrinking bracket; a step that leaves the bracket
  // falls back to bisection, so the bracket semantics of Bisect are kept.
  const double jam = sc.noise_w + q * sc.g_e;
  double lo = 0.0, hi = box.peak_p;
  double p = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxBisectionIterations; ++it) {
    const double v = f1(p, q, sc, nu);
    if (v > 0.0) {
      lo = p;
    } else {
      hi = p;
    }
    const double di = sc.h_i / (sc.noise_w + p * sc.h_i);
    const double de = sc.h_e / (jam + p * sc.h_e);
    const double slope = -(di * di - de * de) / std::numbers::ln2;
    double next = slope < 0.0 ? p - v / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - p);
    p = next;
    if (step <= box.tol_p() || hi - lo <= box.tol_p()) break;
  }
  return p;
}

PQ joint_root(const ScSnapshot& sc, const DualPoint& nu, const ScBox& box,
              double q_lo, double q_hi) {
  CheckInterval(q_lo, q_hi);
  auto profile = [&](double q) {
    const double p = chi_p_of_f1(q, sc, nu, box);
    return std::pair{p, sc_lagrangian(p, q, sc, nu)};
  };
  if (q_hi - q_lo <= box.tol_q()) {
    const auto [p, v] = profile(q_lo);
    return {p, q_lo};
  }

  const double step = (q_hi - q_lo) / (kJointScanPoints - 1);
  int best_i = 0;
  PQ best{};
  double best_v = -INFINITY;
  for (int i = 0; i < kJointScanPoints; ++i) {
    const double q = i + 1 == kJointScanPoints ? q_hi : q_lo + i * step;
    const auto [p, v] = profile(q);
    if (v > best_v) {
      best_v = v;
      best = {p, q};
      best_i = i;
    }
  }

  double a = q_lo + std::max(0, best_i - 1) * step;
  double b = std::min(q_hi, q_lo + (best_i + 1) * step);
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double v1 = profile(x1).second;
  double v2 = profile(x2).second;
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (v1 < v2) {
      a = x1;
      x1 = x2;
      v1 = v2;
      x2 = a + kInvPhi * (b - a);
      v2 = profile(x2).second;
    } else {
      b = x2;
      x2 = x1;
      v2 = v1;
      x1 = b - kInvPhi * (b - a);
      v1 = profile(x1).second;
    }
  }
  const double q_ref = 0.5 * (a + b);
  const auto [p_ref, v_ref] = profile(q_ref);
  if (v_ref > best_v) return {p_ref, q_ref};
  return best;
}

std::optional<ScSolution> solve_positive_branch(const ScSnapshot& sc,
                                                const DualPoint& nu,
                                                const ScBox& box) {
  const double a = sc.a_threshold;
  const double qmax = box.peak_q;
  const double pmax = box.peak_p;
  if (sc.degenerate || a > qmax) return std::nullopt;
  const double tol = box.tol_q();

  // f1 decreases in p and increases in q, so its signs at the corners of the
  // box decide which arms can hold the maximizer.
  if (f1(0.0, qmax, sc, nu) <= 0.0) {
    return Positive(0.0, ZeroPowerJamming(sc, nu, a, qmax), sc, nu, "I");
  }

  auto peak_arm = [&](double lo, std::string_view label) {
    return Positive(pmax, chi_q_of_f2(pmax, sc, nu, lo, qmax, tol), sc, nu,
                    label);
  };
  auto interior_arm = [&](double lo, double hi, std::string_view label) {
    const PQ pq = joint_root(sc, nu, box, lo, hi);
    return Positive(pq.p, pq.q, sc, nu, label);
  };

  if (f1(0.0, a, sc, nu) >= 0.0) {
    if (f1(pmax, a, sc, nu) >= 0.0) return peak_arm(a, "II-i");
    if (f1(pmax, qmax, sc, nu) <= 0.0) return interior_arm(a, qmax, "II-ii");
    const double q1 = chi_q_of_f1(pmax, sc, nu, a, qmax, tol);
    return Better(interior_arm(a, q1, "II-iii/Region1"),
                  peak_arm(q1, "II-iii/Region2"));
  }

  const double q0 = chi_q_of_f1(0.0, sc, nu, a, qmax, tol);
  if (f1(pmax, qmax, sc, nu) <= 0.0) {
    return Better(
        Positive(0.0, ZeroPowerJamming(sc, nu, a, q0), sc, nu, "III-i/Region1"),
        interior_arm(q0, qmax, "III-i/Region2"));
  }
  const double q1 = chi_q_of_f1(pmax, sc, nu, q0, qmax, tol);
  return Better(
      Better(Positive(0.0, ZeroPowerJamming(sc, nu, a, q0), sc, nu,
                      "III-ii/Region1"),
             interior_arm(q0, q1, "III-ii/Region2")),
      peak_arm(q1, "III-ii/Region3"));
}

std::optional<ScSolution> solve_zero_branch(const ScSnapshot& sc,
                                            const DualPoint& nu,
                                            const ScBox& box) {
  if (!sc.degenerate && sc.a_threshold <= 0.0) return std::nullopt;
  const double q_cap =
      sc.degenerate ? box.peak_q : std::min(sc.a_threshold, box.peak_q);
  const double p_coef = -nu.lambda + nu.beta * sc.zeta * sc.h_j + nu.mu * sc.h_e;
  const double q_coef = -nu.beta + nu.mu * sc.g_e;
  const double p = p_coef > 0.0 ? box.peak_p : 0.0;
  const double q = q_coef > 0.0 ? q_cap : 0.0;
  return ScSolution{p, q, sc_lagrangian(p, q, sc, nu), Branch::kZeroSecrecy,
                    sc.degenerate ? "Zero/degenerate" : "Zero"};
}

ScSolution solve_sc(const ScSnapshot& sc, const DualPoint& nu,
                    const ScBox& box) {
  const auto pos = solve_positive_branch(sc, nu, box);
  const auto zero = solve_zero_branch(sc, nu, box);
  if (pos && zero) return pos->value > zero->value ? *pos : *zero;
  if (pos) return *pos;
  return *zero;
}

}  // namespace swipt
