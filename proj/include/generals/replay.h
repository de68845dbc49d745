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

#ifndef GENERALS_REPLAY_H_
#define GENERALS_REPLAY_H_

// Match recording and deterministic re-simulation.
//
// File format (format_version 1): UTF-8, one JSON object per line, keys
// sorted, no insignificant whitespace.
//   line 1      {"type":"header", ...}   everything needed to rebuild tick 0
//   lines 2..   {"type":"step","tick":t,"actions":[[5 ints],[5 ints]]
//                [,"digest":"<16 hex>"]}   ticks 1, 2, 3, ...
//   last line   {"type":"result","ticks":T,"winner":0|1|null,
//                "final_hash":"<16 hex>"}

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "generals/core.h"
#include "generals/env.h"
#include "generals/rewards.h"

namespace generals {

inline constexpr int kReplayFormatVersion = 1;

struct ReplayHeader {
  int format_version = kReplayFormatVersion;
  int height = 0;
  int width = 0;
  std::string map;  // canonical map text
  RulesConfig rules;
  int truncation_ticks = 2000;
  std::optional<ShapingConfig> shaping;
  std::array<std::string, kNumPlayers> players;
  std::uint64_t seed = 0;
  bool digests = false;
  bool operator==(const ReplayHeader&) const = default;
};

struct ReplayRecord {
  int tick = 0;
  JointAction actions{};
  std::optional<std::uint64_t> digest;
  bool operator==(const ReplayRecord&) const = default;
};

struct ReplayResult {
  int ticks = 0;
  std::optional<PlayerId> winner;
  std::uint64_t final_hash = 0;
  bool operator==(const ReplayResult&) const = default;
};

struct ReplayLog {
  ReplayHeader header;
  std::vector<ReplayRecord> records;
  std::optional<ReplayResult> result;
  bool operator==(const ReplayLog&) const = default;
};

class CorruptReplay : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ReplayHeader MakeReplayHeader(const Env& env, std::uint64_t seed,
                              std::array<std::string, kNumPlayers> players,
                              bool digests);

// Appends the actions that produced `tick`. Ticks must continue the log
// without gaps.
void RecordStep(ReplayLog& log, int tick, const JointAction& actions,
                std::optional<std::uint64_t> digest = std::nullopt);

void RecordResult(ReplayLog& log, const GridState& final_state);

std::string SerializeReplay(const ReplayLog& log);
ReplayLog ParseReplay(std::string_view text);

void SaveReplay(const ReplayLog& log, const std::string& path);
ReplayLog LoadReplay(const std::string& path);

GridState InitialStateFromHeader(const ReplayHeader& header);

struct VerifyOutcome {
  bool verified = false;
  std::uint64_t final_hash = 0;
  int divergence_tick = 0;  // first mismatching tick when not verified
  std::string detail;
};

// Re-simulates the log. Per-tick digests are compared when present, the
// result line always.
VerifyOutcome VerifyReplay(const ReplayLog& log);

// State after applying the first `ticks` records.
GridState ReplayStateAt(const ReplayLog& log, int ticks);

}  // namespace generals

#endif  // GENERALS_REPLAY_H_
