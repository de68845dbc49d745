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

#include "generals/core.h"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace generals {

Coord Neighbor(Coord c, Direction d) {
  switch (d) {
    case Direction::kUp:
      return {c.row - 1, c.col};
    case Direction::kDown:
      return {c.row + 1, c.col};
    case Direction::kLeft:
      return {c.row, c.col - 1};
    case Direction::kRight:
      return {c.row, c.col + 1};
  }
  return c;
}

void RulesConfig::Validate() const {
  if (growth_interval_turns < 1) {
    throw ConfigError("growth_interval_turns must be >= 1");
  }
  if (castle_garrison_min < 0 || castle_garrison_min > castle_garrison_max) {
    throw ConfigError("castle garrison range must satisfy 0 <= min <= max");
  }
}

std::string_view ToString(MoveVerdict v) {
  switch (v) {
    case MoveVerdict::kValid:
      return "Valid";
    case MoveVerdict::kGameOver:
      return "GameOver";
    case MoveVerdict::kPlayerEliminated:
      return "PlayerEliminated";
    case MoveVerdict::kSourceOutOfBounds:
      return "SourceOutOfBounds";
    case MoveVerdict::kNotOwned:
      return "NotOwned";
    case MoveVerdict::kInsufficientArmy:
      return "InsufficientArmy";
    case MoveVerdict::kDestinationOutOfBounds:
      return "DestinationOutOfBounds";
    case MoveVerdict::kImpassable:
      return "Impassable";
  }
  return "Unknown";
}

MovementOutcome ResolveMovement(const Cell& source, const Cell& dest,
                                Split split) {
  MovementOutcome out;
  out.moved = split == Split::kAll ? source.army - 1 : source.army / 2;
  out.source = source;
  out.source.army -= out.moved;
  out.dest = dest;
  if (dest.owner == source.owner) {
    out.dest.army += out.moved;
    return out;
  }
  // Ties leave the occupant (player or neutral garrison) in place.
  out.casualties = std::min(out.moved, dest.army);
  if (out.moved > dest.army) {
    out.dest.owner = source.owner;
    out.dest.army = out.moved - dest.army;
    out.captured = true;
  } else {
    out.dest.army = dest.army - out.moved;
  }
  return out;
}

GridState::GridState(int height, int width, std::vector<Cell> cells,
                     std::array<Coord, kNumPlayers> generals,
                     RulesConfig config)
    : height_(height),
      width_(width),
      cells_(std::move(cells)),
      generals_(generals),
      config_(config) {
  config_.Validate();
  if (height_ < 1 || width_ < 1 ||
      cells_.size() != static_cast<std::size_t>(height_) * width_) {
    throw ConfigError("grid dimensions do not match cell count");
  }
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    if (!InBounds(generals_[p]) || at(generals_[p]).kind != CellKind::kGeneral ||
        at(generals_[p]).owner != p) {
      throw ConfigError("player " + std::to_string(p) +
                        " general is missing or not owned");
    }
  }
  for (const Cell& c : cells_) {
    if (c.army < 0) throw ConfigError("negative army");
    if (c.kind == CellKind::kMountain && (c.army != 0 || c.owner != kNeutral)) {
      throw ConfigError("mountains must be neutral and empty");
    }
    if (c.owner != kNeutral && (c.owner < 0 || c.owner >= kNumPlayers)) {
      throw ConfigError("owner id out of range");
    }
  }
  scoreboard_ = RecountScoreboard();
  for (const Cell& c : cells_) {
    if (c.owner != kNeutral && c.kind == CellKind::kCastle) ++castles_[c.owner];
  }
}

void GridState::SetCell(Coord c, const Cell& cell) {
  Cell& slot = cells_[Index(c)];
  if (slot.owner != kNeutral) {
    scoreboard_[slot.owner].land -= 1;
    scoreboard_[slot.owner].army -= slot.army;
    if (slot.kind == CellKind::kCastle) --castles_[slot.owner];
  }
  slot = cell;
  if (slot.owner != kNeutral) {
    scoreboard_[slot.owner].land += 1;
    scoreboard_[slot.owner].army += slot.army;
    if (slot.kind == CellKind::kCastle) ++castles_[slot.owner];
  }
}

void GridState::AddArmy(int index, std::int32_t delta) {
  Cell& slot = cells_[index];
  slot.army += delta;
  if (slot.owner != kNeutral) scoreboard_[slot.owner].army += delta;
}

Scoreboard GridState::RecountScoreboard() const {
  Scoreboard board{};
  for (const Cell& c : cells_) {
    if (c.owner == kNeutral) continue;
    board[c.owner].land += 1;
    board[c.owner].army += c.army;
  }
  return board;
}

MoveVerdict ValidateMove(const GridState& state, PlayerId player,
                         const Move& move) {
  if (!state.alive(player)) return MoveVerdict::kPlayerEliminated;
  if (state.terminal()) return MoveVerdict::kGameOver;
  if (move.pass) return MoveVerdict::kValid;
  if (!state.InBounds(move.source)) return MoveVerdict::kSourceOutOfBounds;
  const Cell& src = state.at(move.source);
  if (src.owner != player) return MoveVerdict::kNotOwned;
  if (src.army < 2) return MoveVerdict::kInsufficientArmy;
  const Coord dest = Neighbor(move.source, move.direction);
  if (!state.InBounds(dest)) return MoveVerdict::kDestinationOutOfBounds;
  if (state.at(dest).kind == CellKind::kMountain) return MoveVerdict::kImpassable;
  return MoveVerdict::kValid;
}

void ApplyGrowth(GridState& state) {
  const int tick = state.tick_;
  if (tick <= 0 || tick % kHalfTurnsPerTurn != 0) return;
  const bool land_bonus =
      tick % (kHalfTurnsPerTurn * state.config_.growth_interval_turns) == 0;
  for (int i = 0; i < state.num_cells(); ++i) {
    const Cell& c = state.cells_[i];
    if (c.owner == kNeutral) continue;
    std::int32_t gain = land_bonus ? 1 : 0;
    if (c.kind == CellKind::kGeneral || c.kind == CellKind::kCastle) ++gain;
    if (gain != 0) state.AddArmy(i, gain);
  }
}

HalfTurnEvents ApplyHalfTurn(GridState& state, const JointMove& moves) {
  HalfTurnEvents events;
  events.first_mover = FirstMover(state.tick_);
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    events.players[p].requested = moves[p];
  }
  if (state.terminal()) {
    for (auto& pe : events.players) pe.verdict = MoveVerdict::kGameOver;
    events.tick = state.tick_;
    events.winner = state.winner_;
    return events;
  }

  const std::array<PlayerId, kNumPlayers> order{
      events.first_mover, Opponent(events.first_mover)};
  for (PlayerId p : order) {
    PlayerEvents& pe = events.players[p];
    const Move& move = moves[p];
    pe.verdict = ValidateMove(state, p, move);
    if (pe.verdict != MoveVerdict::kValid || move.pass) continue;

    const Coord dest = Neighbor(move.source, move.direction);
    pe.outcome = ResolveMovement(state.at(move.source), state.at(dest),
                                 move.split);
    pe.executed = true;
    state.SetCell(move.source, pe.outcome.source);
    state.SetCell(dest, pe.outcome.dest);
    if (!pe.outcome.captured) continue;
    if (pe.outcome.dest.kind == CellKind::kCastle) pe.captured_castle = true;
    if (pe.outcome.dest.kind == CellKind::kGeneral) {
      pe.captured_general = true;
      state.winner_ = p;
      state.alive_[Opponent(p)] = false;
    }
  }

  ++state.tick_;
  events.tick = state.tick_;
  if (!state.terminal()) {
    events.production_applied = state.tick_ % kHalfTurnsPerTurn == 0;
    events.land_bonus_applied =
        state.tick_ %
            (kHalfTurnsPerTurn * state.config_.growth_interval_turns) ==
        0;
    ApplyGrowth(state);
  }
  events.winner = state.winner_;
  return events;
}

std::pair<GridState, HalfTurnEvents> Advance(const GridState& state,
                                             const JointMove& moves) {
  GridState next = state;
  HalfTurnEvents events = ApplyHalfTurn(next, moves);
  return {std::move(next), std::move(events)};
}

std::optional<PlayerId> CheckTerminal(const GridState& state) {
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    if (state.at(state.general(Opponent(p))).owner == p) return p;
  }
  return std::nullopt;
}

Observation Observe(const GridState& state, PlayerId player) {
  const int h = state.height();
  const int w = state.width();
  const std::size_t n = static_cast<std::size_t>(h) * w;
  Observation obs;
  obs.height = h;
  obs.width = w;
  obs.player = player;
  obs.tick = state.tick();
  obs.scoreboard = state.scoreboard();
  obs.visible_army.assign(n, 0);
  obs.owned_by_self.assign(n, 0);
  obs.owned_by_opponent.assign(n, 0);
  obs.neutral_visible.assign(n, 0);
  obs.visible_mountain.assign(n, 0);
  obs.visible_castle.assign(n, 0);
  obs.visible_general.assign(n, 0);
  obs.fog.assign(n, 1);

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (state.at(r * w + c).owner != player) continue;
      const int r0 = std::max(r - 1, 0), r1 = std::min(r + 1, h - 1);
      const int c0 = std::max(c - 1, 0), c1 = std::min(c + 1, w - 1);
      for (int rr = r0; rr <= r1; ++rr) {
        for (int cc = c0; cc <= c1; ++cc) obs.fog[rr * w + cc] = 0;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (obs.fog[i]) continue;
    const Cell& cell = state.at(static_cast<int>(i));
    obs.visible_army[i] = cell.army;
    if (cell.owner == player) {
      obs.owned_by_self[i] = 1;
    } else if (cell.owner == Opponent(player)) {
      obs.owned_by_opponent[i] = 1;
    } else if (cell.kind != CellKind::kMountain) {
      obs.neutral_visible[i] = 1;
    }
    obs.visible_mountain[i] = cell.kind == CellKind::kMountain;
    obs.visible_castle[i] = cell.kind == CellKind::kCastle;
    obs.visible_general[i] = cell.kind == CellKind::kGeneral;
  }
  return obs;
}

namespace {

// FNV-1a over an explicit little-endian byte stream, finalized with a
// SplitMix64 avalanche so that nearby states land far apart.
class Hasher {
 public:
  void Byte(std::uint8_t b) {
    h_ ^= b;
    h_ *= 0x100000001b3ULL;
  }
  void U32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) Byte(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::uint64_t Finish() const {
    std::uint64_t z = h_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::uint64_t StateHash(const GridState& state) {
  Hasher h;
  h.U32(static_cast<std::uint32_t>(state.height()));
  h.U32(static_cast<std::uint32_t>(state.width()));
  h.U32(static_cast<std::uint32_t>(state.tick()));
  h.U32(static_cast<std::uint32_t>(state.config().growth_interval_turns));
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    h.Byte(state.alive(p) ? 1 : 0);
  }
  h.Byte(state.winner().has_value() ? static_cast<std::uint8_t>(*state.winner())
                                    : 0xff);
  for (const Cell& c : state.cells()) {
    h.Byte(static_cast<std::uint8_t>(c.kind));
    h.Byte(static_cast<std::uint8_t>(c.owner + 1));
    h.U32(static_cast<std::uint32_t>(c.army));
  }
  return h.Finish();
}

std::string HashToHex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace generals
