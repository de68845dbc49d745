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

#ifndef GENERALS_MEMORY_H_
#define GENERALS_MEMORY_H_

// Per-player knowledge carried across observations: revealed structures,
// explored cells, cells the opponent is known to have seen, and the last
// seven moves of each side.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "generals/core.h"

namespace generals {

inline constexpr int kMoveHistoryLength = 7;
// revealed castle, revealed general, revealed mountain, explored,
// opponent seen, then kMoveHistoryLength planes per side.
inline constexpr int kMemoryPlaneCount = 5 + 2 * kMoveHistoryLength;

enum class RevealedStructure : std::uint8_t { kNone = 0, kCastle, kGeneral, kMountain };

// Fixed-capacity FIFO of moves, newest first.
class MoveHistory {
 public:
  void Push(const Move& m);
  int size() const { return size_; }
  // 0 is the most recent move.
  const Move& at(int age) const;
  bool operator==(const MoveHistory&) const = default;

 private:
  std::array<Move, kMoveHistoryLength> ring_{};
  int head_ = 0;  // slot of the next write
  int size_ = 0;
};

// Guesses the opponent's move from two consecutive observations: an army
// drop on a cell the opponent held in both, next to a visible gain or
// capture. Cells touched by our own move are not used as sources. Returns
// nullopt when nothing is inferable.
std::optional<Move> InferOpponentMove(const Observation& prev,
                                      const Observation& now,
                                      const std::optional<Move>& own_move);

class MemoryState {
 public:
  MemoryState() = default;
  MemoryState(int height, int width, PlayerId owner);

  // Folds one observation into memory. `own_move` is the move submitted on
  // the half-turn that produced `obs` (nullopt for the initial observation).
  void Update(const Observation& obs, const std::optional<Move>& own_move);

  int height() const { return height_; }
  int width() const { return width_; }
  PlayerId owner() const { return owner_; }
  RevealedStructure revealed(int index) const { return revealed_[index]; }
  bool explored(int index) const { return explored_[index] != 0; }
  bool opponent_seen(int index) const { return opponent_seen_[index] != 0; }
  const MoveHistory& own_moves() const { return own_moves_; }
  const MoveHistory& opponent_moves() const { return opponent_moves_; }

  // kMemoryPlaneCount planes of H*W floats, channel-major. Move planes hold
  // direction + 1 at the move's source cell and 0 elsewhere.
  std::vector<float> Planes() const;
  void WritePlanes(float* out) const;

  bool operator==(const MemoryState&) const = default;

 private:
  int height_ = 0;
  int width_ = 0;
  PlayerId owner_ = 0;
  std::vector<RevealedStructure> revealed_;
  std::vector<std::uint8_t> explored_;
  std::vector<std::uint8_t> opponent_seen_;
  MoveHistory own_moves_;
  MoveHistory opponent_moves_;
  std::optional<Observation> last_;
};

}  // namespace generals

#endif  // GENERALS_MEMORY_H_
