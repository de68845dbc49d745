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

#include "generals/memory.h"

#include <algorithm>

namespace generals {

void MoveHistory::Push(const Move& m) {
  ring_[head_] = m;
  head_ = (head_ + 1) % kMoveHistoryLength;
  size_ = std::min(size_ + 1, kMoveHistoryLength);
}

const Move& MoveHistory::at(int age) const {
  return ring_[(head_ - 1 - age + 2 * kMoveHistoryLength) % kMoveHistoryLength];
}

namespace {

// Production the engine adds to an owned cell when the half-turn ending at
// `tick` closes a full turn. The land bonus interval is unknown to the
// observer, so only structure production is accounted for.
int VisibleProduction(const Observation& obs, int index) {
  if (obs.tick % kHalfTurnsPerTurn != 0) return 0;
  return obs.visible_castle[index] || obs.visible_general[index] ? 1 : 0;
}

}  // namespace

std::optional<Move> InferOpponentMove(const Observation& prev,
                                      const Observation& now,
                                      const std::optional<Move>& own_move) {
  const int w = now.width;
  std::optional<int> own_dest;
  std::optional<int> own_src;
  if (own_move && !own_move->pass) {
    own_src = own_move->source.row * w + own_move->source.col;
    const Coord d = Neighbor(own_move->source, own_move->direction);
    if (d.row >= 0 && d.row < now.height && d.col >= 0 && d.col < w) {
      own_dest = d.row * w + d.col;
    }
  }
  auto seen_both = [&](int i) { return !prev.fog[i] && !now.fog[i]; };

  for (int i = 0; i < now.height * w; ++i) {
    if (!seen_both(i) || i == own_dest) continue;
    if (!prev.owned_by_opponent[i] || !now.owned_by_opponent[i]) continue;
    const int before = prev.visible_army[i] + VisibleProduction(now, i);
    const int after = now.visible_army[i];
    if (after >= before) continue;
    const Coord src{i / w, i % w};
    for (int d = 0; d < kNumDirections; ++d) {
      const Coord dc = Neighbor(src, static_cast<Direction>(d));
      if (dc.row < 0 || dc.row >= now.height || dc.col < 0 || dc.col >= w) {
        continue;
      }
      const int j = dc.row * w + dc.col;
      if (!seen_both(j) || j == own_src) continue;
      const bool captured = !prev.owned_by_opponent[j] && now.owned_by_opponent[j];
      const bool reinforced = prev.owned_by_opponent[j] &&
                              now.owned_by_opponent[j] &&
                              now.visible_army[j] > prev.visible_army[j] +
                                                        VisibleProduction(now, j);
      const bool repelled = !prev.owned_by_opponent[j] &&
                            !now.owned_by_opponent[j] &&
                            now.visible_army[j] < prev.visible_army[j];
      if (!captured && !reinforced && !repelled) continue;
      const Split split = after == 1 ? Split::kAll : Split::kHalf;
      return Move::Go(src, static_cast<Direction>(d), split);
    }
  }
  return std::nullopt;
}

MemoryState::MemoryState(int height, int width, PlayerId owner)
    : height_(height),
      width_(width),
      owner_(owner),
      revealed_(static_cast<std::size_t>(height) * width, RevealedStructure::kNone),
      explored_(static_cast<std::size_t>(height) * width, 0),
      opponent_seen_(static_cast<std::size_t>(height) * width, 0) {}

void MemoryState::Update(const Observation& obs,
                         const std::optional<Move>& own_move) {
  const int n = height_ * width_;
  for (int i = 0; i < n; ++i) {
    if (obs.fog[i]) continue;
    explored_[i] = 1;
    if (obs.visible_general[i]) {
      // The observer's own general is never hidden, so it is not recorded.
      if (!obs.owned_by_self[i]) revealed_[i] = RevealedStructure::kGeneral;
    } else if (obs.visible_castle[i]) {
      revealed_[i] = RevealedStructure::kCastle;
    } else if (obs.visible_mountain[i]) {
      revealed_[i] = RevealedStructure::kMountain;
    }
    if (!obs.owned_by_opponent[i]) continue;
    const int r = i / width_, c = i % width_;
    for (int rr = std::max(r - 1, 0); rr <= std::min(r + 1, height_ - 1); ++rr) {
      for (int cc = std::max(c - 1, 0); cc <= std::min(c + 1, width_ - 1); ++cc) {
        opponent_seen_[rr * width_ + cc] = 1;
      }
    }
  }
  if (own_move) own_moves_.Push(*own_move);
  if (last_) {
    if (auto inferred = InferOpponentMove(*last_, obs, own_move)) {
      opponent_moves_.Push(*inferred);
    }
  }
  last_ = obs;
}

void MemoryState::WritePlanes(float* out) const {
  const int n = height_ * width_;
  std::fill(out, out + static_cast<std::size_t>(kMemoryPlaneCount) * n, 0.0f);
  float* castle = out;
  float* general = out + n;
  float* mountain = out + 2 * n;
  float* explored = out + 3 * n;
  float* seen = out + 4 * n;
  for (int i = 0; i < n; ++i) {
    castle[i] = revealed_[i] == RevealedStructure::kCastle;
    general[i] = revealed_[i] == RevealedStructure::kGeneral;
    mountain[i] = revealed_[i] == RevealedStructure::kMountain;
    explored[i] = explored_[i];
    seen[i] = opponent_seen_[i];
  }
  auto write_history = [&](const MoveHistory& h, float* base) {
    for (int age = 0; age < h.size(); ++age) {
      const Move& m = h.at(age);
      if (m.pass) continue;
      if (m.source.row < 0 || m.source.row >= height_ || m.source.col < 0 ||
          m.source.col >= width_) {
        continue;
      }
      base[age * n + m.source.row * width_ + m.source.col] =
          static_cast<float>(static_cast<int>(m.direction) + 1);
    }
  };
  write_history(own_moves_, out + 5 * n);
  write_history(opponent_moves_, out + (5 + kMoveHistoryLength) * n);
}

std::vector<float> MemoryState::Planes() const {
  std::vector<float> planes(static_cast<std::size_t>(kMemoryPlaneCount) *
                            height_ * width_);
  WritePlanes(planes.data());
  return planes;
}

}  // namespace generals
