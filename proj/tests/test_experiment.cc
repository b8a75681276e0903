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

#include "swipt/experiment.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "swipt/dual.h"

namespace swipt {
namespace {

TEST(ConfigTest, EmptyDocumentGivesDefaults) {
  const ExperimentConfig c = parse_config("");
  EXPECT_EQ(c.n_sc, 64u);
  EXPECT_EQ(c.p_dbm, 30.0);
  EXPECT_EQ(c.sigma2_dbm, -60.0);
  EXPECT_EQ(c.ploss_exp, 3.0);
  EXPECT_EQ(c.qbar_uw, 100.0);
  EXPECT_EQ(c.d1_m, 10.0);
  EXPECT_EQ(c.peak_factor, 2.0);
  const SystemParams p = c.ParamsFor(c.p_dbm, c.qbar_uw);
  EXPECT_DOUBLE_EQ(p.total_power_w, 1.0);
  EXPECT_DOUBLE_EQ(p.peak_p_w, 2.0 / 64);
  EXPECT_DOUBLE_EQ(p.peak_q_w, 2.0 / 64);
  EXPECT_NEAR(p.noise_w, 1e-9, 1e-24);
}

TEST(ConfigTest, ParsesValuesListsAndComments) {
  const ExperimentConfig c = parse_config(
      "# comment line\n"
      "qbar_uw = 700   # trailing comment\n"
      "n_sc=16\n"
      "\n"
      "sweep = p\n"
      "p_dbm_list = 20, 25,30\n"
      "schemes = proposed, epa\n"
      "fading = none\n"
      "seed = 99\n");
  EXPECT_NEAR(c.ParamsFor(c.p_dbm, c.qbar_uw).eh_min_w, 7e-4, 1e-18);
  EXPECT_EQ(c.n_sc, 16u);
  EXPECT_EQ(c.sweep, SweepKind::kPower);
  EXPECT_EQ(c.p_dbm_list, (std::vector<double>{20, 25, 30}));
  EXPECT_EQ(c.schemes, (std::vector<Scheme>{Scheme::kProposed, Scheme::kEpa}));
  EXPECT_EQ(c.fading, FadingKind::kNone);
  EXPECT_EQ(c.seed, 99u);
}

TEST(ConfigTest, ErrorsCarryLineNumbers) {
  try {
    parse_config("seed = 1\nn_sc = 0\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_config("bogus_key = 3\n"), ConfigError);
  EXPECT_THROW(parse_config("p_dbm = thirty\n"), ConfigError);
  EXPECT_THROW(parse_config("just some words\n"), ConfigError);
  EXPECT_THROW(parse_config("trials = 1.5\n"), ConfigError);
  EXPECT_THROW(parse_config("qbar_list = \n"), ConfigError);
  EXPECT_THROW(parse_config("sweep = sideways\n"), ConfigError);
  EXPECT_THROW(parse_config("schemes = proposed, magic\n"), ConfigError);
  EXPECT_THROW(parse_config("d1_m = 25\n"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/dir/cfg.txt"), ConfigError);
}

TEST(SweepTest, PointsPerKind) {
  ExperimentConfig c;
  c.qbar_list = {0, 300};
  auto pts = sweep_points(c);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1].sweep_name, "qbar_uw");
  EXPECT_EQ(pts[1].qbar_uw, 300.0);

  c.sweep = SweepKind::kD1;
  pts = sweep_points(c);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].sweep_name, "d1_m");
  EXPECT_EQ(pts[2].d1_m, 16.0);

  c.sweep = SweepKind::kPowerD1;
  EXPECT_EQ(sweep_points(c).size(), c.p_dbm_list.size() * c.d1_list.size());
}

ExperimentConfig SmallConfig() {
  ExperimentConfig c;
  c.n_sc = 8;
  c.trials = 2;
  c.qbar_list = {0, 200, 400};
  return c;
}

TEST(RunTest, OneRowPerPointTrialScheme) {
  const ExperimentConfig c = SmallConfig();
  const auto rows = run_experiment(c, {1});
  ASSERT_EQ(rows.size(), 3u * 2u * 4u);
  EXPECT_EQ(rows[0].sweep_value, 0.0);
  EXPECT_EQ(rows[0].trial, 0);
  EXPECT_EQ(rows[0].scheme, Scheme::kProposed);
  EXPECT_EQ(rows[1].scheme, Scheme::kEpa);
  for (const auto& r : rows) {
    EXPECT_EQ(r.seed, c.seed);
    if (!r.feasible) {
      EXPECT_EQ(r.secrecy_rate_bits, 0.0);
    }
  }
}

TEST(RunTest, StrongEavesdropperNoJammerRowsAreZero) {
  ExperimentConfig c = SmallConfig();
  c.qbar_list = {0};
  c.schemes = {Scheme::kNoJammer};
  c.d_tx_er_m = 2.0;  // ER far closer to the Tx than the IR on every draw
  c.fading = FadingKind::kNone;
  for (const auto& r : run_experiment(c, {1})) {
    EXPECT_TRUE(r.feasible);
    EXPECT_NEAR(r.secrecy_rate_bits, 0.0, 1e-9);
  }
}

TEST(RunTest, ThreadCountDoesNotChangeResults) {
  const ExperimentConfig c = SmallConfig();
  auto a = run_experiment(c, {1});
  auto b = run_experiment(c, {3});
  ASSERT_EQ(a.size(), b.size());
  for (auto* rows : {&a, &b})
    for (auto& r : *rows) r.runtime_ms = 0;
  EXPECT_EQ(to_csv(a), to_csv(b));
}

// Growing the harvest target shrinks the feasible set, so the optimum is
// non-increasing. The certified form: a later rate never exceeds an earlier
// dual bound, and each rate sits within its own bound.
TEST(RunTest, ProposedNonIncreasingInHarvestTarget) {
  ExperimentConfig c = SmallConfig();
  c.n_sc = 16;
  c.trials = 3;
  c.qbar_list = {0, 100, 200, 300, 400, 500, 600, 700};
  const auto pts = sweep_points(c);
  for (int t = 0; t < c.trials; ++t) {
    double min_bound = INFINITY;
    for (const auto& pt : pts) {
      const ChannelState ch = draw_channel(c, pt, t);
      const SolveReport rep = ellipsoid_solve(ch, c.ParamsFor(pt.p_dbm, pt.qbar_uw));
      if (!rep.allocation.feasible) continue;
      EXPECT_LE(rep.allocation.secrecy_rate, min_bound + 1e-9)
          << "trial " << t << " qbar " << pt.qbar_uw;
      EXPECT_LE(rep.allocation.secrecy_rate, rep.dual_bound + 1e-9);
      min_bound = std::min(min_bound, rep.dual_bound);
    }
  }
}

// More power enlarges the feasible set: every later dual bound must cover
// every earlier achieved rate.
TEST(RunTest, ProposedNonDecreasingInPower) {
  ExperimentConfig c = SmallConfig();
  c.n_sc = 16;
  c.trials = 3;
  c.sweep = SweepKind::kPower;
  const auto pts = sweep_points(c);
  for (int t = 0; t < c.trials; ++t) {
    double max_rate = 0.0;
    for (const auto& pt : pts) {
      const ChannelState ch = draw_channel(c, pt, t);
      const SolveReport rep = ellipsoid_solve(ch, c.ParamsFor(pt.p_dbm, pt.qbar_uw));
      ASSERT_TRUE(rep.allocation.feasible);
      EXPECT_GE(rep.dual_bound, max_rate - 1e-9)
          << "trial " << t << " p_dbm " << pt.p_dbm;
      max_rate = std::max(max_rate, rep.allocation.secrecy_rate);
    }
  }
}

TEST(RunTest, PairedDrawsAcrossSweepValues) {
  ExperimentConfig c = SmallConfig();
  const auto pts = sweep_points(c);
  EXPECT_EQ(draw_channel(c, pts[0], 1), draw_channel(c, pts[2], 1));
  EXPECT_FALSE(draw_channel(c, pts[0], 0) == draw_channel(c, pts[0], 1));
  c.sweep = SweepKind::kD1;
  const auto d1 = sweep_points(c);
  EXPECT_FALSE(draw_channel(c, d1[0], 0) == draw_channel(c, d1[1], 0));
}

ResultRow Row(double value, int trial, Scheme s, double rate, bool ok) {
  ResultRow r;
  r.sweep_name = "qbar_uw";
  r.sweep_value = value;
  r.trial = trial;
  r.scheme = s;
  r.secrecy_rate_bits = rate;
  r.feasible = ok;
  r.iterations = 12;
  r.runtime_ms = 1.25;
  r.seed = 7;
  return r;
}

TEST(CsvTest, OneRowGivesTwoLines) {
  const std::string csv = to_csv({Row(100, 0, Scheme::kEpa, 1.0 / 3, true)});
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], kCsvHeader);
  EXPECT_EQ(lines[1].rfind("qbar_uw,100,0,epa,0.33333333333333331,true,12,", 0), 0u)
      << lines[1];
}

TEST(CsvTest, RoundTripAndFileIo) {
  const std::vector<ResultRow> rows = {Row(0, 0, Scheme::kProposed, 123.456789012345, true),
                                       Row(700, 1, Scheme::kNoCancelBcd, 0.0, false)};
  const auto back = parse_csv(to_csv(rows));
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].sweep_name, rows[i].sweep_name);
    EXPECT_NEAR(back[i].sweep_value, rows[i].sweep_value, 1e-12);
    EXPECT_NEAR(back[i].secrecy_rate_bits, rows[i].secrecy_rate_bits, 1e-12);
    EXPECT_EQ(back[i].feasible, rows[i].feasible);
    EXPECT_EQ(back[i].scheme, rows[i].scheme);
    EXPECT_EQ(back[i].trial, rows[i].trial);
    EXPECT_EQ(back[i].iterations, rows[i].iterations);
    EXPECT_EQ(back[i].seed, rows[i].seed);
  }
  const auto path =
      (std::filesystem::temp_directory_path() / "swipt_csv_test.csv").string();
  write_csv(rows, path);
  EXPECT_EQ(to_csv(read_csv(path)), to_csv(rows));
  std::filesystem::remove(path);
  EXPECT_THROW(write_csv({}, path), std::invalid_argument);
  EXPECT_ANY_THROW(write_csv(rows, "/nonexistent/dir/out.csv"));
}

TEST(AggregateTest, MeanCiAndFeasibleFraction) {
  const std::vector<ResultRow> rows = {
      Row(0, 0, Scheme::kEpa, 1.0, true), Row(0, 1, Scheme::kEpa, 3.0, true),
      Row(0, 2, Scheme::kEpa, 0.0, false), Row(0, 0, Scheme::kProposed, 4.0, true)};
  const auto agg = aggregate(rows);
  ASSERT_EQ(agg.size(), 2u);
  const AggregateRow& epa = agg[0].scheme == Scheme::kEpa ? agg[0] : agg[1];
  EXPECT_EQ(epa.trials, 3);
  EXPECT_NEAR(epa.mean_rate, 4.0 / 3, 1e-12);
  // sample sd of {1, 3, 0} is sqrt(7/3)
  EXPECT_NEAR(epa.ci_half_width, 1.96 * std::sqrt(7.0 / 3) / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(epa.feasible_fraction, 2.0 / 3, 1e-12);
  // Aggregation is a pure function of the CSV.
  const auto again = aggregate(parse_csv(to_csv(rows)));
  EXPECT_EQ(again.size(), agg.size());
  EXPECT_EQ(again[0].mean_rate, agg[0].mean_rate);
}

}  // namespace
}  // namespace swipt
