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

#include "generals/env.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace generals {

DecodedAction DecodeAction(const ActionVector& v, int height, int width) {
  DecodedAction out;
  const auto [pass, i, j, direction, split] = v;
  if (pass == 1) return out;
  if (pass != 0 || i < 0 || i >= height || j < 0 || j >= width ||
      direction < 0 || direction >= kNumDirections || split < 0 || split > 1) {
    out.out_of_range = true;
    return out;
  }
  out.move = Move::Go({i, j}, static_cast<Direction>(direction),
                      static_cast<Split>(split));
  return out;
}

ActionVector EncodeAction(const Move& m) {
  if (m.pass) return {1, 0, 0, 0, 0};
  return {0, m.source.row, m.source.col, static_cast<int>(m.direction),
          static_cast<int>(m.split)};
}

int HeadIndex(int i, int j, int k, int /*height*/, int width) {
  return (i * width + j) * kHeadChannels + k;
}

HeadCoordinates HeadCoordinatesOf(int flat, int /*height*/, int width) {
  const int cell = flat / kHeadChannels;
  return {cell / width, cell % width, flat % kHeadChannels};
}

ActionVector IndexToAction(int flat, int height, int width) {
  const HeadCoordinates hc = HeadCoordinatesOf(flat, height, width);
  if (hc.k == 0) return {1, 0, 0, 0, 0};
  return {0, hc.i, hc.j, (hc.k - 1) / 2, (hc.k - 1) % 2};
}

int ActionToIndex(const ActionVector& v, int height, int width) {
  const DecodedAction d = DecodeAction(v, height, width);
  if (d.move.pass) return kPassIndex;
  const int k = 1 + 2 * static_cast<int>(d.move.direction) +
                static_cast<int>(d.move.split);
  return HeadIndex(d.move.source.row, d.move.source.col, k, height, width);
}

std::vector<std::uint8_t> LegalActionMask(const GridState& state,
                                          PlayerId player) {
  std::vector<std::uint8_t> mask(
      static_cast<std::size_t>(state.num_cells()) * kHeadChannels, 0);
  mask[kPassIndex] = 1;
  for (int idx = 0; idx < state.num_cells(); ++idx) {
    const Cell& c = state.at(idx);
    if (c.owner != player || c.army < 2) continue;
    const Coord src = state.CoordOf(idx);
    for (int d = 0; d < kNumDirections; ++d) {
      const Move m = Move::Go(src, static_cast<Direction>(d));
      if (ValidateMove(state, player, m) != MoveVerdict::kValid) continue;
      mask[idx * kHeadChannels + 1 + 2 * d] = 1;
      mask[idx * kHeadChannels + 2 + 2 * d] = 1;
    }
  }
  return mask;
}

int TensorChannels(bool with_memory) {
  return kBaseChannelCount + (with_memory ? kMemoryPlaneCount : 0);
}

std::vector<float> ToTensor(const Observation& obs, const MemoryState* memory,
                            const TensorSpec& spec) {
  const int n = obs.height * obs.width;
  std::vector<float> t(static_cast<std::size_t>(TensorChannels(memory)) * n,
                       0.0f);
  auto plane = [&](int ch) { return t.data() + static_cast<std::size_t>(ch) * n; };
  auto fill = [&](int ch, double value) {
    std::fill(plane(ch), plane(ch) + n, static_cast<float>(value));
  };
  for (int i = 0; i < n; ++i) {
    plane(kArmyChannel)[i] = static_cast<float>(std::log1p(obs.visible_army[i]));
    plane(kOwnedSelfChannel)[i] = obs.owned_by_self[i];
    plane(kOwnedOpponentChannel)[i] = obs.owned_by_opponent[i];
    plane(kNeutralChannel)[i] = obs.neutral_visible[i];
    plane(kMountainChannel)[i] = obs.visible_mountain[i];
    plane(kCastleChannel)[i] = obs.visible_castle[i];
    plane(kGeneralChannel)[i] = obs.visible_general[i];
    plane(kFogChannel)[i] = obs.fog[i];
  }
  const double area = static_cast<double>(n);
  fill(kOwnLandChannel, obs.self_stats().land / area);
  fill(kOpponentLandChannel, obs.opponent_stats().land / area);
  fill(kOwnArmyChannel, std::log1p(static_cast<double>(obs.self_stats().army)));
  fill(kOpponentArmyChannel,
       std::log1p(static_cast<double>(obs.opponent_stats().army)));
  const int period = kHalfTurnsPerTurn * spec.growth_interval_turns;
  fill(kLandBonusChannel,
       static_cast<double>(period - obs.tick % period) / period);
  fill(kPriorityChannel, obs.has_priority() ? 1.0 : 0.0);
  fill(kTickChannel, static_cast<double>(obs.tick) / spec.truncation_ticks);
  if (memory) memory->WritePlanes(plane(kBaseChannelCount));
  return t;
}

void EnvConfig::Validate() const {
  rules.Validate();
  if (truncation_ticks < 1) throw ConfigError("truncation_ticks must be >= 1");
  if (shaping) shaping->Validate();
  if (const auto* g = std::get_if<GeneratedMap>(&map)) g->spec.Validate();
}

GridLayout ResolveLayout(const MapSource& source, std::uint64_t seed) {
  if (const auto* g = std::get_if<GeneratedMap>(&source)) {
    return Generate(g->spec, seed);
  }
  if (const auto* t = std::get_if<MapText>(&source)) {
    return ParseMapText(t->text);
  }
  return std::get<GridLayout>(source);
}

Env::Env(EnvConfig config) : config_(std::move(config)) { config_.Validate(); }

TensorSpec Env::tensor_spec() const {
  return {config_.rules.growth_interval_turns, config_.truncation_ticks};
}

std::vector<float> Env::Tensor(PlayerId p, const Observation& obs) const {
  return ToTensor(obs, config_.include_memory_planes ? &memory_[p] : nullptr,
                  tensor_spec());
}

ResetResult Env::Reset(std::uint64_t seed) {
  ResetResult out;
  layout_ = ResolveLayout(config_.map, seed);
  state_.emplace(MakeInitialState(layout_, config_.rules));
  done_ = false;
  const bool track = config_.include_memory_planes || config_.track_memory;
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    out.observations[p] = Observe(*state_, p);
    if (track) {
      memory_[p] = MemoryState(layout_.height, layout_.width, p);
      memory_[p].Update(out.observations[p], std::nullopt);
    }
    if (config_.emit_tensors) out.tensors[p] = Tensor(p, out.observations[p]);
  }
  out.layout = layout_;
  return out;
}

StepResult Env::Step(const JointAction& actions) {
  if (done_) throw StepAfterDone();
  StepResult out;
  JointMove moves;
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    const DecodedAction d =
        DecodeAction(actions[p], state_->height(), state_->width());
    moves[p] = d.move;
    out.info.action_out_of_range[p] = d.out_of_range;
  }

  std::array<PotentialInputs, kNumPlayers> before;
  if (config_.shaping) {
    for (PlayerId p = 0; p < kNumPlayers; ++p) {
      before[p] = ExtractPotentialInputs(*state_, p);
    }
  }

  out.info.events = ApplyHalfTurn(*state_, moves);
  out.terminated = state_->terminal();
  out.truncated = !out.terminated && state_->tick() >= config_.truncation_ticks;
  out.rewards = SparseRewards(state_->winner());
  if (config_.shaping) {
    for (PlayerId p = 0; p < kNumPlayers; ++p) {
      std::optional<PotentialInputs> after;
      if (!out.terminated) after = ExtractPotentialInputs(*state_, p);
      out.rewards[p] =
          ShapedReward(before[p], after, out.rewards[p], *config_.shaping);
    }
  }

  const bool track = config_.include_memory_planes || config_.track_memory;
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    out.observations[p] = Observe(*state_, p);
    if (track) memory_[p].Update(out.observations[p], moves[p]);
    if (config_.emit_tensors) out.tensors[p] = Tensor(p, out.observations[p]);
  }
  done_ = out.terminated || out.truncated;
  return out;
}

}  // namespace generals
