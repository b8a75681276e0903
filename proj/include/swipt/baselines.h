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

#ifndef SWIPT_BASELINES_H_
#define SWIPT_BASELINES_H_

#include <vector>

#include "swipt/dual.h"
#include "swipt/model.h"

namespace swipt {

enum class Scheme { kProposed, kEpa, kNoJammer, kNoCancelBcd };

const char* ToString(Scheme s);

struct BaselineResult {
  Scheme scheme = Scheme::kEpa;
  PowerAllocation allocation;
  int iterations = 0;  // BCD rounds, or ellipsoid iterations for no-jammer
  // BCD only: objective after each completed round, starting with the
  // initial point.
  std::vector<double> objective_history;
};

// Uniform Tx power and uniform split of the harvested jammer budget.
BaselineResult epa_allocate(const ChannelState& ch, const SystemParams& params);

// q = 0; secrecy rate maximized over p under total power, harvested power
// and peak constraints.
BaselineResult no_jammer_solve(const ChannelState& ch,
                               const SystemParams& params,
                               const SolverConfig& cfg = {});

// Starting point of the block iteration. Starting from the no-jammer
// solution leaves subcarriers without secrecy at q = 0 stuck at p = q = 0,
// since neither block alone gains from them.
enum class BcdStart { kEqualPower, kNoJammer };

struct BcdConfig {
  BcdStart start = BcdStart::kEqualPower;
  int max_rounds = 50;
  double min_improvement = 1e-5;  // bits per round
  SolverConfig block;             // ellipsoid settings of each block
};

// Jamming is not cancelled at the IR. Alternates between the Tx powers and
// the jammer powers, solving each block by dual decomposition; starts from
// the no-jammer solution with q = 0.
BaselineResult bcd_nocancel_solve(const ChannelState& ch,
                                  const SystemParams& params,
                                  const BcdConfig& cfg = {});

}  // namespace swipt

#endif  // SWIPT_BASELINES_H_
