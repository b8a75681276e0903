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

#ifndef SWIPT_SCAN_H_
#define SWIPT_SCAN_H_

#include <algorithm>
#include <cmath>
#include <utility>

namespace swipt {

struct ScanResult {
  double x = 0.0;
  double value = 0.0;
};

// Maximizes fn on [lo, hi] by a uniform scan of `points` samples followed by
// golden-section refinement on the two cells around the best sample.
template <class Fn>
ScanResult scan_maximize(Fn&& fn, double lo, double hi, int points = 256,
                         int golden_iterations = 48) {
  if (!(hi > lo)) return {lo, fn(lo)};
  const double step = (hi - lo) / (points - 1);
  ScanResult best{lo, -INFINITY};
  int best_i = 0;
  for (int i = 0; i < points; ++i) {
    const double x = i + 1 == points ? hi : lo + i * step;
    const double v = fn(x);
    if (v > best.value) {
      best = {x, v};
      best_i = i;
    }
  }
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo + std::max(0, best_i - 1) * step;
  double b = std::min(hi, lo + (best_i + 1) * step);
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double v1 = fn(x1);
  double v2 = fn(x2);
  for (int it = 0; it < golden_iterations; ++it) {
    if (v1 < v2) {
      a = x1;
      x1 = x2;
      v1 = v2;
      x2 = a + kInvPhi * (b - a);
      v2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      v2 = v1;
      x1 = b - kInvPhi * (b - a);
      v1 = fn(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  const double vm = fn(xm);
  if (vm > best.value) best = {xm, vm};
  return best;
}

}  // namespace swipt

#endif  // SWIPT_SCAN_H_
