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

#ifndef SWIPT_SUBPROBLEM_H_
#define SWIPT_SUBPROBLEM_H_

#include <optional>
#include <string_view>

#include "swipt/model.h"

namespace swipt {

// Peak-power box of a single subcarrier and the root-finding tolerances
// derived from it.
struct ScBox {
  double peak_p = 0.0;
  double peak_q = 0.0;

  double tol_p() const { return peak_p * 1e-8; }
  double tol_q() const { return peak_q * 1e-8; }

  static ScBox From(const SystemParams& params) {
    return {params.peak_p_w, params.peak_q_w};
  }
};

enum class Branch { kPositiveSecrecy, kZeroSecrecy };

struct ScSolution {
  double p = 0.0;
  double q = 0.0;
  double value = 0.0;  // per-subcarrier Lagrangian at (p, q)
  Branch branch = Branch::kZeroSecrecy;
  // Which arm of the case analysis produced the point, e.g. "II-iii/Region2".
  // Always points at a string literal.
  std::string_view case_label;
};

inline constexpr int kMaxBisectionIterations = 200;
inline constexpr int kJointScanPoints = 256;
inline constexpr int kGoldenIterations = 48;

// Root of the (q-decreasing) f2(p, .) on [lo, hi]. Returns lo when f2 <= 0 at
// lo and hi when f2 >= 0 at hi. Throws std::invalid_argument if lo > hi.
double chi_q_of_f2(double p, const ScSnapshot& sc, const DualPoint& nu,
                   double lo, double hi, double tol);

// Root of the (q-increasing) f1(p, .) on [lo, hi]. Returns lo when f1 >= 0 at
// lo and hi when f1 <= 0 at hi. Throws std::invalid_argument if lo > hi.
double chi_q_of_f1(double p, const ScSnapshot& sc, const DualPoint& nu,
                   double lo, double hi, double tol);

// Root of the (p-decreasing) f1(., q) on [0, peak_p], clamped to the box.
double chi_p_of_f1(double q, const ScSnapshot& sc, const DualPoint& nu,
                   const ScBox& box);

struct PQ {
  double p = 0.0;
  double q = 0.0;
};

// Best point of the profile q -> L(chi_p_of_f1(q), q) on [q_lo, q_hi]:
// a uniform scan followed by golden-section refinement around the best
// sample.
PQ joint_root(const ScSnapshot& sc, const DualPoint& nu, const ScBox& box,
              double q_lo, double q_hi);

// Maximizer of the per-subcarrier Lagrangian over [0, peak_p] x [A, peak_q].
// Empty when the subcarrier is degenerate or A > peak_q.
std::optional<ScSolution> solve_positive_branch(const ScSnapshot& sc,
                                                const DualPoint& nu,
                                                const ScBox& box);

// Maximizer over the region q < A where the secrecy rate vanishes and the
// Lagrangian is linear. Empty when A = 0 on a non-degenerate subcarrier.
std::optional<ScSolution> solve_zero_branch(const ScSnapshot& sc,
                                            const DualPoint& nu,
                                            const ScBox& box);

// Global maximizer over the whole box: the better of the two branches.
ScSolution solve_sc(const ScSnapshot& sc, const DualPoint& nu,
                    const ScBox& box);

}  // namespace swipt

#endif  // SWIPT_SUBPROBLEM_H_
