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

#include "swipt/channels.h"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace swipt {
namespace {

// Published known-answer vectors for Philox4x32 with 10 rounds.
TEST(PhiloxTest, KnownAnswers) {
  using C = Philox4x32::Counter;
  EXPECT_EQ(Philox4x32::Block({0, 0, 0, 0}, {0, 0}),
            (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::Block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                              {0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::Block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                              {0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(PhiloxTest, UnitIntervalRange) {
  EXPECT_EQ(UnitInterval(0, 0), 0.0);
  EXPECT_LT(UnitInterval(0xffffffff, 0xffffffff), 1.0);
}

TEST(GeometryTest, ReferencePlacement) {
  const Geometry g = node_positions(10.0);
  EXPECT_EQ(g.tx.x, 0.0);
  EXPECT_EQ(g.tx.y, 0.0);
  EXPECT_EQ(g.ir.x, 20.0);
  EXPECT_EQ(g.jammer.x, 10.0);
  EXPECT_EQ(g.jammer.y, 0.0);
  EXPECT_NEAR(g.er.x, 8.660254037844387, 1e-12);
  EXPECT_NEAR(g.er.y, 5.0, 1e-12);
  EXPECT_NEAR(Distance(g.jammer, g.er), 5.176380902050414, 1e-12);
}

TEST(GeometryTest, RejectsOutOfRangeJammer) {
  EXPECT_THROW(node_positions(0.0), std::invalid_argument);
  EXPECT_THROW(node_positions(20.0), std::invalid_argument);
  EXPECT_THROW(node_positions(-1.0), std::invalid_argument);
  EXPECT_NO_THROW(node_positions(4.0));
}

SystemParams NoFadingParams(std::size_t n) {
  SystemParams p;
  p.n_sc = n;
  p.ref_gain = 1e-3;
  p.ploss_exp = 3.0;
  return p;
}

TEST(GainsTest, PathLossWithoutFading) {
  Geometry g{{0, 0}, {10, 0}, {0, 10}, {5, 0}};
  const ChannelState ch =
      channel_gains(g, {FadingKind::kNone, 0}, NoFadingParams(4));
  ASSERT_EQ(ch.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(ch.h_i[k], 1e-6, 1e-18);   // 10 m
    EXPECT_NEAR(ch.h_e[k], 1e-6, 1e-18);   // 10 m
    EXPECT_NEAR(ch.h_j[k], 8e-6, 1e-17);   // 5 m: halved distance, x8
    EXPECT_NEAR(ch.g_i[k], 8e-6, 1e-17);
  }
}

TEST(GainsTest, DecreasingInDistance) {
  double prev = INFINITY;
  for (double d1 = 1; d1 < 20; d1 += 1) {
    const Geometry g = node_positions(d1);
    const ChannelState ch =
        channel_gains(g, {FadingKind::kNone, 0}, NoFadingParams(1));
    EXPECT_LT(ch.h_j[0], prev);
    prev = ch.h_j[0];
  }
}

TEST(GainsTest, SameSeedIsBitIdentical) {
  const Geometry g = node_positions(10.0);
  const FadingSpec f{FadingKind::kRayleighUnitMean, 42};
  const SystemParams p = NoFadingParams(64);
  EXPECT_EQ(channel_gains(g, f, p, 3), channel_gains(g, f, p, 3));
}

TEST(GainsTest, DistinctSeedsAndTrialsDiffer) {
  const Geometry g = node_positions(10.0);
  const SystemParams p = NoFadingParams(8);
  const ChannelState a = channel_gains(g, {FadingKind::kRayleighUnitMean, 1}, p, 0);
  const ChannelState b = channel_gains(g, {FadingKind::kRayleighUnitMean, 2}, p, 0);
  const ChannelState c = channel_gains(g, {FadingKind::kRayleighUnitMean, 1}, p, 1);
  EXPECT_NE(a.h_i[0], b.h_i[0]);
  EXPECT_NE(a.h_i[0], c.h_i[0]);
}

// Substreams are keyed by link, so the draws of one link do not depend on
// how many subcarriers are generated.
TEST(GainsTest, SubstreamsIndependentOfSize) {
  const Geometry g = node_positions(10.0);
  const FadingSpec f{FadingKind::kRayleighUnitMean, 9};
  const ChannelState small = channel_gains(g, f, NoFadingParams(4), 2);
  const ChannelState big = channel_gains(g, f, NoFadingParams(64), 2);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(small.h_i[k], big.h_i[k]);
    EXPECT_EQ(small.g_e[k], big.g_e[k]);
  }
}

TEST(FadingTest, UnitMeanExponential) {
  const FadingSpec f{FadingKind::kRayleighUnitMean, 123};
  double sum = 0.0, sum_sq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double x = FadingSample(f, i / 64, Link::kTxEr, i % 64);
    ASSERT_GT(x, 0.0);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 1.0, 0.02);
  EXPECT_NEAR(sum_sq / n - mean * mean, 1.0, 0.05);  // exponential: var = 1
  EXPECT_EQ(FadingSample({FadingKind::kNone, 1}, 0, Link::kTxIr, 0), 1.0);
  EXPECT_STREQ(ToString(FadingKind::kNone), "none");
  EXPECT_STREQ(ToString(FadingKind::kRayleighUnitMean), "rayleigh");
}

}  // namespace
}  // namespace swipt
