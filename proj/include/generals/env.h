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

#ifndef GENERALS_ENV_H_
#define GENERALS_ENV_H_

// Two-seat environment over the core rules: reset/step lifecycle, action
// encodings, observation tensors and truncation.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "generals/core.h"
#include "generals/mapgen.h"
#include "generals/memory.h"
#include "generals/rewards.h"

namespace generals {

// [pass, i, j, direction, split]; split 0 = all but one, 1 = half.
using ActionVector = std::array<int, 5>;
using JointAction = std::array<ActionVector, kNumPlayers>;

struct DecodedAction {
  Move move;
  bool out_of_range = false;  // true when a malformed vector became a pass
};

// Components outside their domain (including i, j outside the grid) decode
// to a pass with out_of_range set.
DecodedAction DecodeAction(const ActionVector& v, int height, int width);
// Pass moves encode as [1, 0, 0, 0, 0].
ActionVector EncodeAction(const Move& m);

// Policy-head layout: H x W x 9 with flat index (i * W + j) * 9 + k.
// k = 0 is pass; k in 1..8 encodes direction (k - 1) / 2 and split
// (k - 1) % 2. Only index 0 (cell (0,0), k = 0) is the canonical pass.
inline constexpr int kHeadChannels = 9;
inline constexpr int kPassIndex = 0;

struct HeadCoordinates {
  int i = 0;
  int j = 0;
  int k = 0;
  bool operator==(const HeadCoordinates&) const = default;
};

int HeadIndex(int i, int j, int k, int height, int width);
HeadCoordinates HeadCoordinatesOf(int flat, int height, int width);
ActionVector IndexToAction(int flat, int height, int width);
// Inverse of IndexToAction on non-pass actions; every pass maps to kPassIndex.
int ActionToIndex(const ActionVector& v, int height, int width);

// 0/1 mask over the H*W*9 head for `player`: kPassIndex plus every valid move.
std::vector<std::uint8_t> LegalActionMask(const GridState& state, PlayerId player);

// Observation tensor layout, channel-major C x H x W floats.
enum TensorChannel : int {
  kArmyChannel = 0,        // log(1 + visible army)
  kOwnedSelfChannel,
  kOwnedOpponentChannel,
  kNeutralChannel,
  kMountainChannel,
  kCastleChannel,
  kGeneralChannel,
  kFogChannel,
  kOwnLandChannel,         // land / (H * W)
  kOpponentLandChannel,    // land / (H * W)
  kOwnArmyChannel,         // log(1 + army)
  kOpponentArmyChannel,    // log(1 + army)
  kLandBonusChannel,       // ticks until the next land bonus / bonus period
  kPriorityChannel,        // 1 when the observer moves first next half-turn
  kTickChannel,            // tick / truncation_ticks
  kBaseChannelCount,
};

struct TensorSpec {
  int growth_interval_turns = 25;
  int truncation_ticks = 2000;
};

int TensorChannels(bool with_memory);

// Pure function of its arguments. `memory` planes are appended when given.
std::vector<float> ToTensor(const Observation& obs, const MemoryState* memory,
                            const TensorSpec& spec);

struct GeneratedMap {
  MapSpec spec;
};
struct MapText {
  std::string text;
};
using MapSource = std::variant<GeneratedMap, GridLayout, MapText>;

struct EnvConfig {
  MapSource map = GeneratedMap{};
  RulesConfig rules;
  int truncation_ticks = 2000;
  // Sparse rewards when empty.
  std::optional<ShapingConfig> shaping;
  bool include_memory_planes = false;
  // Maintain per-seat MemoryState even without memory planes.
  bool track_memory = false;
  bool emit_tensors = false;

  void Validate() const;
};

class StepAfterDone : public std::logic_error {
 public:
  StepAfterDone() : std::logic_error("step called on a finished episode") {}
};

struct StepInfo {
  HalfTurnEvents events;
  std::array<bool, kNumPlayers> action_out_of_range{false, false};
};

struct StepResult {
  std::array<Observation, kNumPlayers> observations;
  std::array<std::vector<float>, kNumPlayers> tensors;  // when emit_tensors
  std::array<double, kNumPlayers> rewards{0.0, 0.0};
  bool terminated = false;
  bool truncated = false;
  StepInfo info;
};

struct ResetResult {
  std::array<Observation, kNumPlayers> observations;
  std::array<std::vector<float>, kNumPlayers> tensors;
  GridLayout layout;
};

class Env {
 public:
  explicit Env(EnvConfig config);

  // Builds a fresh game. For generated maps the layout is a pure function of
  // `seed`; fixed layouts ignore it.
  ResetResult Reset(std::uint64_t seed);
  StepResult Step(const JointAction& actions);

  bool done() const { return done_; }
  const GridState& state() const { return *state_; }
  const GridLayout& layout() const { return layout_; }
  const EnvConfig& config() const { return config_; }
  const MemoryState& memory(PlayerId p) const { return memory_[p]; }
  TensorSpec tensor_spec() const;

  std::vector<float> Tensor(PlayerId p, const Observation& obs) const;

 private:
  EnvConfig config_;
  GridLayout layout_;
  std::optional<GridState> state_;
  std::array<MemoryState, kNumPlayers> memory_;
  bool done_ = true;
};

GridLayout ResolveLayout(const MapSource& source, std::uint64_t seed);

}  // namespace generals

#endif  // GENERALS_ENV_H_
