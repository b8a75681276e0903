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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "swipt/baselines.h"
#include "swipt/ellipsoid.h"
#include "test_util.h"

namespace swipt {
namespace {

using testing::LogUniform;
using testing::ParamsForN;
using testing::RandomChannel;

TEST(DualValueTest, ZeroMultipliersUsePeakPower) {
  std::mt19937_64 rng(3);
  const ChannelState ch = RandomChannel(rng, 8);
  const SystemParams params = ParamsForN(8, 0.0);
  const DualEvaluation ev = dual_value_and_subgrad({0, 0, 0}, ch, params);
  for (std::size_t k = 0; k < 8; ++k) {
    const ScSnapshot sc = SnapshotAt(ch, params, k);
    if (!sc.degenerate && sc.a_threshold <= params.peak_q_w &&
        ev.alloc.q[k] >= sc.a_threshold) {
      EXPECT_EQ(ev.alloc.p[k], params.peak_p_w) << k;
    }
  }
  double sum_p = 0.0;
  for (double p : ev.alloc.p) sum_p += p;
  EXPECT_NEAR(ev.subgradient[0], params.total_power_w - sum_p, 1e-12);
}

TEST(DualValueTest, HugeLambdaShutsTransmitterOff) {
  std::mt19937_64 rng(5);
  const ChannelState ch = RandomChannel(rng, 8);
  const SystemParams params = ParamsForN(8, 1e-4);
  const double lam = 1e12;
  const DualEvaluation ev = dual_value_and_subgrad({lam, 1.0, 0.0}, ch, params);
  for (double p : ev.alloc.p) EXPECT_EQ(p, 0.0);
  EXPECT_NEAR(ev.value, lam * params.total_power_w, 1e-9 * lam);
  EXPECT_EQ(ev.subgradient[0], params.total_power_w);
  EXPECT_EQ(ev.subgradient[1], 0.0);
  EXPECT_EQ(ev.subgradient[2], -params.eh_min_w);
}

TEST(DualValueTest, SubgradientIsConstraintSlack) {
  std::mt19937_64 rng(8);
  const ChannelState ch = RandomChannel(rng, 6);
  const SystemParams params = ParamsForN(6, 2e-4);
  const DualEvaluation ev = dual_value_and_subgrad({30, 500, 800}, ch, params);
  const ConstraintSlacks s = eval_constraints(ev.alloc, ch, params);
  EXPECT_NEAR(ev.subgradient[0], s.power, 1e-12);
  EXPECT_NEAR(ev.subgradient[1], s.jammer, 1e-15);
  EXPECT_NEAR(ev.subgradient[2], s.eh, 1e-15);
  EXPECT_EQ(ev.case_labels.size(), 6u);
}

// g(nu) upper-bounds the rate of every feasible allocation.
TEST(DualValueTest, WeakDualityAgainstFeasiblePoints) {
  std::mt19937_64 rng(9);
  int checked = 0, violations = 0;
  for (int inst = 0; inst < 30; ++inst) {
    const ChannelState ch = RandomChannel(rng, 2);
    const SystemParams params = ParamsForN(2, 1e-5);
    std::vector<PowerAllocation> feasible;
    const BaselineResult epa = epa_allocate(ch, params);
    if (epa.allocation.feasible) feasible.push_back(epa.allocation);
    const SolveReport rep = ellipsoid_solve(ch, params);
    if (rep.allocation.feasible) feasible.push_back(rep.allocation);
    for (int k = 0; k < 50; ++k) {
      const DualPoint nu{LogUniform(rng, 1e-2, 1e4), LogUniform(rng, 1e-2, 1e4),
                         LogUniform(rng, 1e-2, 1e4)};
      const double g = dual_value_and_subgrad(nu, ch, params).value;
      for (const auto& a : feasible) {
        ++checked;
        if (g < a.secrecy_rate - 1e-6) ++violations;
      }
    }
  }
  EXPECT_GT(checked, 100);
  EXPECT_EQ(violations, 0);
}

TEST(DualValueTest, ConvexityProbe) {
  std::mt19937_64 rng(10);
  const ChannelState ch = RandomChannel(rng, 4);
  const SystemParams params = ParamsForN(4, 1e-4);
  int violations = 0;
  for (int k = 0; k < 300; ++k) {
    const DualPoint a{LogUniform(rng, 1e-2, 1e4), LogUniform(rng, 1e-2, 1e4),
                      LogUniform(rng, 1e-2, 1e4)};
    const DualPoint b{LogUniform(rng, 1e-2, 1e4), LogUniform(rng, 1e-2, 1e4),
                      LogUniform(rng, 1e-2, 1e4)};
    const DualPoint mid{(a.lambda + b.lambda) / 2, (a.beta + b.beta) / 2,
                        (a.mu + b.mu) / 2};
    const double ga = dual_value_and_subgrad(a, ch, params).value;
    const double gb = dual_value_and_subgrad(b, ch, params).value;
    const double gm = dual_value_and_subgrad(mid, ch, params).value;
    if (gm > (ga + gb) / 2 + 1e-6 * (1 + std::abs(gm))) ++violations;
  }
  EXPECT_EQ(violations, 0);
}

TEST(EllipsoidTest, VolumeRatioForDimensionThree) {
  const double n = 3;
  EXPECT_NEAR(EllipsoidVolumeRatio(3),
              std::pow(n * n / (n * n - 1), n) * (n - 1) / (n + 1), 1e-15);
  EXPECT_LT(EllipsoidVolumeRatio(3), 1.0);
}

TEST(EllipsoidTest, DeterminantContractsByFixedFactor) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> nd;
  const std::vector<double> c{1, 2, 3};
  EllipsoidState e(c, 5.0);
  const double step = std::log(EllipsoidVolumeRatio(3));
  for (int k = 0; k < 200; ++k) {
    Eigen::VectorXd a(3);
    a << nd(rng), nd(rng), nd(rng);
    const double before = e.LogDet();
    ASSERT_TRUE(e.Cut(a));
    EXPECT_NEAR(e.LogDet() - before, step, 1e-6);
    EXPECT_TRUE(e.IsPositiveDefinite());
  }
  EXPECT_THROW(EllipsoidState(std::vector<double>{1.0}, 1.0), std::invalid_argument);
}

// Minimizes a convex quadratic whose minimizer lies inside the orthant.
TEST(EllipsoidTest, MinimizesConvexFunction) {
  const std::vector<double> target{2, 0.5, 3};
  auto oracle = [&](std::span<const double> x) {
    DualEval ev;
    ev.subgradient.resize(3);
    for (int i = 0; i < 3; ++i) {
      ev.value += (x[i] - target[i]) * (x[i] - target[i]);
      ev.subgradient[i] = 2 * (x[i] - target[i]);
    }
    return ev;
  };
  const EllipsoidResult r = minimize_on_orthant(
      EllipsoidState(std::vector<double>{5, 5, 5}, 20.0), {800, 1e-8, true}, oracle);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.best_point[i], target[i], 1e-3);
  for (std::size_t k = 1; k < r.log_det_history.size(); ++k)
    EXPECT_LT(r.log_det_history[k], r.log_det_history[k - 1]);
}

TEST(SolverTest, SingleSubcarrierPureRate) {
  ChannelState ch{{1e-6}, {0.0}, {1e-6}, {1e-6}, {0.0}};
  SystemParams params = ParamsForN(1, 0.0);
  params.peak_p_w = 0.5;
  params.peak_q_w = 0.5;
  const SolveReport rep = ellipsoid_solve(ch, params);
  ASSERT_TRUE(rep.allocation.feasible);
  EXPECT_NEAR(rep.allocation.p[0], std::min(params.peak_p_w, params.total_power_w),
              1e-6);
  EXPECT_NEAR(rep.allocation.q[0], 0.0, 1e-9);
  EXPECT_LE(rep.relative_gap(), 1e-4);
}

TEST(SolverTest, DetectsInfeasibleHarvestTarget) {
  std::mt19937_64 rng(14);
  const ChannelState ch = RandomChannel(rng, 4);
  SystemParams params = ParamsForN(4, 0.0);
  params.eh_min_w = 1.01 * max_harvest_upper_bound(ch, params);
  const SolveReport rep = ellipsoid_solve(ch, params);
  EXPECT_EQ(rep.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(rep.allocation.feasible);
  EXPECT_STREQ(ToString(rep.status), "infeasible");
}

TEST(SolverTest, SmallInstanceGapAndRandomSearchCrossCheck) {
  std::mt19937_64 rng(15);
  for (int inst = 0; inst < 5; ++inst) {
    const ChannelState ch = RandomChannel(rng, 4);
    const SystemParams params = ParamsForN(4, 2e-4);
    SolverConfig cfg;
    cfg.max_iterations = 500;
    cfg.record_history = true;
    const SolveReport rep = ellipsoid_solve(ch, params, cfg);
    ASSERT_TRUE(rep.allocation.feasible) << inst;
    EXPECT_LE(rep.iterations, 500);
    EXPECT_LE(rep.relative_gap(), 0.02) << inst;
    EXPECT_GE(rep.gap, -1e-6);
    for (std::size_t k = 1; k < rep.best_primal_history.size(); ++k)
      EXPECT_GE(rep.best_primal_history[k], rep.best_primal_history[k - 1]);

    // Random feasible allocations never beat the dual bound.
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int s = 0; s < 5000; ++s) {
      PowerAllocation a = PowerAllocation::Zeros(4);
      for (int k = 0; k < 4; ++k) {
        a.p[k] = u(rng) * params.peak_p_w;
        a.q[k] = u(rng) * params.peak_q_w;
      }
      if (!is_feasible(a, ch, params)) continue;
      EXPECT_LE(total_secrecy_rate(a.p, a.q, ch, params), rep.dual_bound + 1e-6);
    }
  }
}

TEST(RepairTest, FeasibleInputUnchanged) {
  std::mt19937_64 rng(16);
  const ChannelState ch = RandomChannel(rng, 4);
  const SystemParams params = ParamsForN(4, 1e-5);
  const SolveReport rep = ellipsoid_solve(ch, params);
  ASSERT_TRUE(rep.allocation.feasible);
  const PowerAllocation out = repair_primal(rep.allocation, ch, params);
  EXPECT_EQ(out.p, rep.allocation.p);
  EXPECT_EQ(out.q, rep.allocation.q);
  EXPECT_TRUE(out.feasible);
}

TEST(RepairTest, ScalesOverBudgetPowerUniformly) {
  std::mt19937_64 rng(17);
  const ChannelState ch = RandomChannel(rng, 4);
  SystemParams params = ParamsForN(4, 0.0);
  params.peak_p_w = 1.0;
  PowerAllocation a = PowerAllocation::Zeros(4);
  for (double& p : a.p) p = 1.1 * params.total_power_w / 4;
  const PowerAllocation out = repair_primal(a, ch, params);
  for (double p : out.p) EXPECT_NEAR(p, params.total_power_w / 4, 1e-12);
  EXPECT_TRUE(out.feasible);
}

TEST(RepairTest, NearFeasibleIteratesBecomeFeasible) {
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failures = 0;
  for (int inst = 0; inst < 200; ++inst) {
    const ChannelState ch = RandomChannel(rng, 8);
    const SystemParams params = ParamsForN(8, 1e-4 * u(rng) * 5);
    if (max_harvest_upper_bound(ch, params) < params.eh_min_w) continue;
    PowerAllocation a = PowerAllocation::Zeros(8);
    for (int k = 0; k < 8; ++k) {
      a.p[k] = u(rng) * 1.3 * params.peak_p_w;
      a.q[k] = u(rng) * 1.3 * params.peak_q_w;
    }
    const PowerAllocation out = repair_primal(a, ch, params);
    const ConstraintSlacks s = eval_constraints(out, ch, params);
    if (!out.feasible) {
      ++failures;
      continue;
    }
    EXPECT_GE(s.power, -1e-9);
    EXPECT_GE(s.jammer, -1e-9);
    EXPECT_GE(s.eh, -1e-9);
  }
  EXPECT_EQ(failures, 0);
}

}  // namespace
}  // namespace swipt
