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


#include <cmath>

#include "doctest.h"
#include "generals/rewards.h"
#include "properties.h"

namespace generals {
namespace {

PotentialInputs Inputs(double land_self, double land_enemy, double army_self,
                       double army_enemy, double castles_self,
                       double castles_enemy) {
  return {{land_self, army_self, castles_self},
          {land_enemy, army_enemy, castles_enemy}};
}

// Weights that make the potential a plain log10 land ratio.
ShapingConfig LandOnly(double gamma) {
  ShapingConfig cfg;
  cfg.gamma = gamma;
  cfg.w_land = 1.0;
  cfg.w_army = 0.0;
  cfg.w_castle = 0.0;
  return cfg;
}

PotentialInputs WithPotential(double phi) {
  return Inputs(std::pow(10.0, phi), 1.0, 1, 1, 0, 0);
}

TEST_CASE("Potential examples") {
  const ShapingConfig cfg;
  CHECK(Potential(Inputs(7, 7, 30, 30, 2, 2), cfg) == 0.0);
  CHECK(Potential(Inputs(20, 10, 5, 5, 1, 1), cfg) ==
        doctest::Approx(0.3 * std::log(2.0) / std::log(10.0)).epsilon(1e-12));
  CHECK(Potential(Inputs(20, 10, 5, 5, 1, 1), cfg) == doctest::Approx(0.09031).epsilon(1e-4));
  CHECK(Potential(Inputs(100, 1, 5, 5, 1, 1), cfg) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(Potential(Inputs(1, 1000, 5, 5, 1, 1), cfg) == doctest::Approx(-0.3).epsilon(1e-12));
}

TEST_CASE("Shaped reward examples") {
  const ShapingConfig unit = LandOnly(1.0);
  CHECK(ShapedReward(WithPotential(0.4), WithPotential(0.4), 0.0, unit) ==
        doctest::Approx(0.0).epsilon(1e-12));
  const ShapingConfig disc = LandOnly(0.99);
  CHECK(ShapedReward(WithPotential(0.2), WithPotential(0.3), 0.0, disc) ==
        doctest::Approx(0.097).epsilon(1e-12));
  CHECK(ShapedReward(WithPotential(0.5), std::nullopt, 1.0, unit) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("Sparse rewards are zero-sum") {
  CHECK(SparseRewards(std::nullopt) == std::array<double, 2>{0, 0});
  CHECK(SparseRewards(0) == std::array<double, 2>{1, -1});
  CHECK(SparseRewards(1) == std::array<double, 2>{-1, 1});
}

TEST_CASE("Potential is bounded and antisymmetric") {
  const ShapingConfig cfg;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const GridState s = testing::ScrambledState(seed);
    const double a = Potential(ExtractPotentialInputs(s, 0), cfg);
    const double b = Potential(ExtractPotentialInputs(s, 1), cfg);
    REQUIRE(std::abs(a) <= 1.0);
    REQUIRE(a == doctest::Approx(-b).epsilon(1e-12));
    REQUIRE(Potential(ExtractPotentialInputs(s, 0).Swapped(), cfg) ==
            doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("Extracted inputs follow the scoreboard") {
  GridState s = testing::FixtureState(testing::kOpenMap5x5, {{{0, 0}, 0, 4}});
  const PotentialInputs in = ExtractPotentialInputs(s, 0);
  CHECK(in.self.land == 2);
  CHECK(in.self.army == 5);
  CHECK(in.enemy.land == 1);
  CHECK(in.enemy.castles == 0);
}

TEST_CASE("Telescoping over random rollouts") {
  int terminated = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (double gamma : {1.0, 0.99}) {
      const auto check = testing::CheckTelescoping(seed, gamma, seed % 2 == 1, 300);
      REQUIRE(check.residual <= 1e-9);
      terminated += check.terminated;
    }
  }
  CHECK(terminated > 0);
}

TEST_CASE("Shaping config validation") {
  ShapingConfig cfg;
  cfg.max_ratio = 1.0;
  CHECK_THROWS_AS(cfg.Validate(), ConfigError);
  cfg = ShapingConfig{};
  cfg.gamma = 1.5;
  CHECK_THROWS_AS(cfg.Validate(), ConfigError);
}

}  // namespace
}  // namespace generals
