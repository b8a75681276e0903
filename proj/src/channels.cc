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
#include <numbers>
#include <stdexcept>

namespace swipt {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

void MulHiLo(std::uint32_t a, std::uint32_t b, std::uint32_t* hi,
             std::uint32_t* lo) {
  const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
  *hi = static_cast<std::uint32_t>(prod >> 32);
  *lo = static_cast<std::uint32_t>(prod);
}

}  // namespace

Philox4x32::Counter Philox4x32::Block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    MulHiLo(kMul0, ctr[0], &hi0, &lo0);
    MulHiLo(kMul1, ctr[2], &hi1, &lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

double UnitInterval(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits =
      ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
  return static_cast<double>(bits) * 0x1.0p-53;
}

double Distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

const char* ToString(FadingKind k) {
  return k == FadingKind::kNone ? "none" : "rayleigh";
}

Geometry node_positions(double d1_m, const GeometrySpec& spec) {
  if (!(d1_m > 0.0 && d1_m < spec.d_tx_ir_m))
    throw std::invalid_argument("jammer distance d1 must lie in (0, d_tx_ir)");
  const double angle = spec.er_angle_deg * std::numbers::pi / 180.0;
  Geometry g;
  g.tx = {0.0, 0.0};
  g.ir = {spec.d_tx_ir_m, 0.0};
  g.jammer = {d1_m, 0.0};
  g.er = {spec.d_tx_er_m * std::cos(angle), spec.d_tx_er_m * std::sin(angle)};
  return g;
}

double FadingSample(const FadingSpec& fading, std::uint64_t trial, Link link,
                    std::uint64_t sc) {
  if (fading.kind == FadingKind::kNone) return 1.0;
  // Counter words: subcarrier, link, trial (64 bits). Key: seed.
  const Philox4x32::Counter ctr{static_cast<std::uint32_t>(sc),
                                static_cast<std::uint32_t>(link),
                                static_cast<std::uint32_t>(trial),
                                static_cast<std::uint32_t>(trial >> 32)};
  const Philox4x32::Key key{static_cast<std::uint32_t>(fading.seed),
                            static_cast<std::uint32_t>(fading.seed >> 32)};
  const auto block = Philox4x32::Block(ctr, key);
  const double u = UnitInterval(block[0], block[1]);
  return -std::log1p(-u);
}

ChannelState channel_gains(const Geometry& geom, const FadingSpec& fading,
                           const SystemParams& params, std::uint64_t trial) {
  const std::size_t n = params.n_sc;
  auto link_gains = [&](Point2 a, Point2 b, Link link) {
    const double d = Distance(a, b);
    if (!(d > 0.0)) throw std::invalid_argument("coincident nodes");
    const double mean = params.ref_gain * std::pow(d, -params.ploss_exp);
    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k)
      g[k] = mean * FadingSample(fading, trial, link, k);
    return g;
  };
  ChannelState ch;
  ch.h_i = link_gains(geom.tx, geom.ir, Link::kTxIr);
  ch.h_e = link_gains(geom.tx, geom.er, Link::kTxEr);
  ch.h_j = link_gains(geom.tx, geom.jammer, Link::kTxJammer);
  ch.g_i = link_gains(geom.jammer, geom.ir, Link::kJammerIr);
  ch.g_e = link_gains(geom.jammer, geom.er, Link::kJammerEr);
  return ch;
}

}  // namespace swipt
