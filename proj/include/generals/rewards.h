// Copyright 2026 The Generals Arena Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENERALS_REWARDS_H_
#define GENERALS_REWARDS_H_

// Sparse win/lose rewards and potential-based shaping.
//
//   phi(s)  = w_land * phi_land + w_army * phi_army + w_castle * phi_castle
//   phi_x   = clamp(log(x_self / x_enemy), -log(max_ratio), log(max_ratio))
//             / log(max_ratio)
//   shaped  = r + gamma * phi(s') - phi(s),      phi(terminal) = 0
//
// Castle counts exclude generals and use add-one smoothing.

#include <array>
#include <optional>

#include "generals/core.h"

namespace generals {

struct ShapingConfig {
  double gamma = 0.99;
  double max_ratio = 10.0;
  double w_land = 0.3;
  double w_army = 0.3;
  double w_castle = 0.4;

  void Validate() const;
  bool operator==(const ShapingConfig&) const = default;
};

struct PotentialInputs {
  struct Side {
    double land = 1;
    double army = 1;
    double castles = 0;
  };
  Side self;
  Side enemy;

  // The same quantities seen from the other seat.
  PotentialInputs Swapped() const { return {enemy, self}; }
};

// Reads the true (unfogged) counts for `player`. Land and army are floored
// at 1 so the log-ratios stay finite.
PotentialInputs ExtractPotentialInputs(const GridState& state, PlayerId player);

double Potential(const PotentialInputs& in, const ShapingConfig& cfg);

// `next` == nullopt denotes a terminal successor, whose potential is 0.
double ShapedReward(const PotentialInputs& prev,
                    const std::optional<PotentialInputs>& next,
                    double r_original, const ShapingConfig& cfg);

// +1 winner, -1 loser, 0 otherwise.
std::array<double, kNumPlayers> SparseRewards(std::optional<PlayerId> winner);

}  // namespace generals

#endif  // GENERALS_REWARDS_H_
