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

#include "generals/rewards.h"

#include <algorithm>
#include <cmath>

namespace generals {

void ShapingConfig::Validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("gamma must lie in (0, 1]");
  if (!(max_ratio > 1.0)) throw ConfigError("max_ratio must exceed 1");
  if (std::abs(w_land + w_army + w_castle - 1.0) > 1e-9) {
    throw ConfigError("shaping weights must sum to 1");
  }
}

PotentialInputs ExtractPotentialInputs(const GridState& state,
                                       PlayerId player) {
  auto side = [&state](PlayerId p) {
    const PlayerStats& s = state.scoreboard()[p];
    return PotentialInputs::Side{
        static_cast<double>(std::max(s.land, 1)),
        static_cast<double>(std::max<std::int64_t>(s.army, 1)),
        static_cast<double>(state.CastleCount(p))};
  };
  return {side(player), side(Opponent(player))};
}

namespace {

double LogRatioFeature(double self, double enemy, double log_max) {
  return std::clamp(std::log(self / enemy), -log_max, log_max) / log_max;
}

}  // namespace

double Potential(const PotentialInputs& in, const ShapingConfig& cfg) {
  const double log_max = std::log(cfg.max_ratio);
  const double land = LogRatioFeature(in.self.land, in.enemy.land, log_max);
  const double army = LogRatioFeature(in.self.army, in.enemy.army, log_max);
  const double castle = LogRatioFeature(in.self.castles + 1.0,
                                        in.enemy.castles + 1.0, log_max);
  return cfg.w_land * land + cfg.w_army * army + cfg.w_castle * castle;
}

double ShapedReward(const PotentialInputs& prev,
                    const std::optional<PotentialInputs>& next,
                    double r_original, const ShapingConfig& cfg) {
  const double phi_next = next ? Potential(*next, cfg) : 0.0;
  return r_original + cfg.gamma * phi_next - Potential(prev, cfg);
}

std::array<double, kNumPlayers> SparseRewards(std::optional<PlayerId> winner) {
  std::array<double, kNumPlayers> r{0.0, 0.0};
  if (winner) {
    r[*winner] = 1.0;
    r[Opponent(*winner)] = -1.0;
  }
  return r;
}

}  // namespace generals
