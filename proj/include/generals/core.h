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

#ifndef GENERALS_CORE_H_
#define GENERALS_CORE_H_

// Authoritative two-player game rules: state, move validation, simultaneous
// half-turn resolution, combat, production and fogged observations.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace generals {

using PlayerId = int;
inline constexpr PlayerId kNeutral = -1;
inline constexpr int kNumPlayers = 2;
inline constexpr int kHalfTurnsPerTurn = 2;

inline constexpr PlayerId Opponent(PlayerId p) { return 1 - p; }

enum class CellKind : std::uint8_t { kPlain = 0, kMountain, kCastle, kGeneral };

// Index order is part of the action encoding: Up=0, Down=1, Left=2, Right=3.
enum class Direction : std::uint8_t { kUp = 0, kDown, kLeft, kRight };
inline constexpr int kNumDirections = 4;

// All moves army-1 units, Half moves floor(army/2).
enum class Split : std::uint8_t { kAll = 0, kHalf = 1 };

struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

Coord Neighbor(Coord c, Direction d);

struct Cell {
  CellKind kind = CellKind::kPlain;
  PlayerId owner = kNeutral;
  std::int32_t army = 0;
  bool operator==(const Cell&) const = default;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RulesConfig {
  // Every growth_interval_turns full turns, every owned cell gains one unit.
  int growth_interval_turns = 25;
  // Admissible neutral castle garrison range.
  int castle_garrison_min = 40;
  int castle_garrison_max = 50;

  void Validate() const;
  bool operator==(const RulesConfig&) const = default;
};

struct Move {
  bool pass = true;
  Coord source;
  Direction direction = Direction::kUp;
  Split split = Split::kAll;

  static Move Pass() { return Move{}; }
  static Move Go(Coord source, Direction d, Split s = Split::kAll) {
    return Move{false, source, d, s};
  }
  bool operator==(const Move&) const = default;
};

using JointMove = std::array<Move, kNumPlayers>;

enum class MoveVerdict : std::uint8_t {
  kValid = 0,
  kGameOver,
  kPlayerEliminated,
  kSourceOutOfBounds,
  kNotOwned,
  kInsufficientArmy,
  kDestinationOutOfBounds,
  kImpassable,
};
std::string_view ToString(MoveVerdict v);

struct PlayerStats {
  int land = 0;
  std::int64_t army = 0;
  bool operator==(const PlayerStats&) const = default;
};
using Scoreboard = std::array<PlayerStats, kNumPlayers>;

// Result of moving units out of `source` into `dest`. The mover is
// source.owner.
struct MovementOutcome {
  Cell source;
  Cell dest;
  std::int32_t moved = 0;
  // Units destroyed on each side; zero for merges.
  std::int32_t casualties = 0;
  bool captured = false;
};

// Pure cell-level combat. Caller guarantees the move is valid.
MovementOutcome ResolveMovement(const Cell& source, const Cell& dest,
                                Split split);

struct PlayerEvents {
  Move requested;
  MoveVerdict verdict = MoveVerdict::kValid;
  bool executed = false;
  MovementOutcome outcome;  // meaningful only when executed
  bool captured_castle = false;
  bool captured_general = false;
};

struct HalfTurnEvents {
  int tick = 0;  // tick after the half-turn
  PlayerId first_mover = 0;
  std::array<PlayerEvents, kNumPlayers> players;
  bool production_applied = false;
  bool land_bonus_applied = false;
  std::optional<PlayerId> winner;
};

inline PlayerId FirstMover(int tick) { return tick % 2; }

class GridState;

// Resolves one simultaneous half-turn in place. Invalid moves become passes.
// Moves execute sequentially against the evolving state in priority order:
// player 0 first when the current tick is even, player 1 first when odd.
// The tick then advances and production is applied on schedule. Capturing a
// general ends the game immediately; later moves of that half-turn are dropped.
HalfTurnEvents ApplyHalfTurn(GridState& state, const JointMove& moves);

// Production at the current tick: on every full-turn boundary each owned
// general and castle gains one unit; every 2 * growth_interval_turns ticks
// every owned cell gains one more. Nothing happens at tick 0.
void ApplyGrowth(GridState& state);

class GridState {
 public:
  GridState(int height, int width, std::vector<Cell> cells,
            std::array<Coord, kNumPlayers> generals, RulesConfig config);

  int height() const { return height_; }
  int width() const { return width_; }
  int num_cells() const { return height_ * width_; }
  int tick() const { return tick_; }
  const RulesConfig& config() const { return config_; }
  Coord general(PlayerId p) const { return generals_[p]; }
  bool alive(PlayerId p) const { return alive_[p]; }
  std::optional<PlayerId> winner() const { return winner_; }
  bool terminal() const { return winner_.has_value(); }

  bool InBounds(Coord c) const {
    return c.row >= 0 && c.row < height_ && c.col >= 0 && c.col < width_;
  }
  int Index(Coord c) const { return c.row * width_ + c.col; }
  Coord CoordOf(int index) const { return {index / width_, index % width_}; }

  const Cell& at(Coord c) const { return cells_[Index(c)]; }
  const Cell& at(int index) const { return cells_[index]; }
  const std::vector<Cell>& cells() const { return cells_; }

  // Replaces a cell and keeps the scoreboard counters in sync. Intended for
  // rule resolution and test fixtures.
  void SetCell(Coord c, const Cell& cell);

  // Incrementally maintained per-player land and army totals.
  const Scoreboard& scoreboard() const { return scoreboard_; }
  // Full recount from the grid; always equal to scoreboard().
  Scoreboard RecountScoreboard() const;

  // Owned castles, generals excluded.
  int CastleCount(PlayerId p) const { return castles_[p]; }

  bool operator==(const GridState&) const = default;

 private:
  friend HalfTurnEvents ApplyHalfTurn(GridState&, const JointMove&);
  friend void ApplyGrowth(GridState&);

  void AddArmy(int index, std::int32_t delta);

  int height_;
  int width_;
  std::vector<Cell> cells_;
  std::array<Coord, kNumPlayers> generals_;
  RulesConfig config_;
  int tick_ = 0;
  std::array<bool, kNumPlayers> alive_{true, true};
  std::optional<PlayerId> winner_;
  Scoreboard scoreboard_{};
  std::array<int, kNumPlayers> castles_{};
};

// Valid iff pass, or the source is in bounds, owned by `player`, holds at
// least 2 units, and the destination is in bounds and not a mountain.
MoveVerdict ValidateMove(const GridState& state, PlayerId player,
                         const Move& move);

// Value-semantics wrapper around ApplyHalfTurn.
std::pair<GridState, HalfTurnEvents> Advance(const GridState& state,
                                             const JointMove& moves);


std::optional<PlayerId> CheckTerminal(const GridState& state);

// Fogged per-player view. Plane vectors are row-major H*W.
struct Observation {
  int height = 0;
  int width = 0;
  PlayerId player = 0;
  int tick = 0;
  std::vector<std::int32_t> visible_army;
  std::vector<std::uint8_t> owned_by_self;
  std::vector<std::uint8_t> owned_by_opponent;
  std::vector<std::uint8_t> neutral_visible;
  std::vector<std::uint8_t> visible_mountain;
  std::vector<std::uint8_t> visible_castle;
  std::vector<std::uint8_t> visible_general;
  std::vector<std::uint8_t> fog;  // 1 = hidden
  Scoreboard scoreboard{};        // indexed by player id, never fogged

  // 1 when the observer's move executes first in the coming half-turn.
  bool has_priority() const { return FirstMover(tick) == player; }
  const PlayerStats& self_stats() const { return scoreboard[player]; }
  const PlayerStats& opponent_stats() const {
    return scoreboard[Opponent(player)];
  }
  bool operator==(const Observation&) const = default;
};

Observation Observe(const GridState& state, PlayerId player);

// Stable 64-bit digest of the full state (grid, tick, liveness, rules).
std::uint64_t StateHash(const GridState& state);

std::string HashToHex(std::uint64_t hash);

}  // namespace generals

#endif  // GENERALS_CORE_H_
