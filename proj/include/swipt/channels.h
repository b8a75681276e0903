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

#ifndef SWIPT_CHANNELS_H_
#define SWIPT_CHANNELS_H_

#include <array>
#include <cstdint>

#include "swipt/model.h"

namespace swipt {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A block of
// four 32-bit words is a pure function of (counter, key), so independent
// streams are obtained by fixing parts of the counter.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter Block(Counter ctr, Key key);
};

// Uniform double in [0, 1) built from two 32-bit words (53 random bits).
double UnitInterval(std::uint32_t hi, std::uint32_t lo);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

double Distance(Point2 a, Point2 b);

struct Geometry {
  Point2 tx;
  Point2 ir;
  Point2 er;
  Point2 jammer;
};

struct GeometrySpec {
  double d_tx_ir_m = 20.0;
  double d_tx_er_m = 10.0;
  double er_angle_deg = 30.0;
};

enum class FadingKind { kNone, kRayleighUnitMean };

struct FadingSpec {
  FadingKind kind = FadingKind::kRayleighUnitMean;
  std::uint64_t seed = 0;
};

const char* ToString(FadingKind k);

enum class Link : std::uint32_t { kTxIr, kTxEr, kTxJammer, kJammerIr, kJammerEr };

// Tx at the origin, IR on the x axis, jammer between them at distance d1 from
// the Tx, ER at the given range and angle. Throws std::invalid_argument
// unless 0 < d1 < d_tx_ir.
Geometry node_positions(double d1_m, const GeometrySpec& spec = {});

// Unit-mean power fading sample for (trial, link, subcarrier).
double FadingSample(const FadingSpec& fading, std::uint64_t trial, Link link,
                    std::uint64_t sc);

// gain = ref_gain * d^-ploss_exp * X, X = 1 or unit-mean exponential.
ChannelState channel_gains(const Geometry& geom, const FadingSpec& fading,
                           const SystemParams& params, std::uint64_t trial = 0);

}  // namespace swipt

#endif  // SWIPT_CHANNELS_H_
