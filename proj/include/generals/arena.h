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

#ifndef GENERALS_ARENA_H_
#define GENERALS_ARENA_H_

// Agents, match execution, series and round-robin tournaments.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "generals/env.h"
#include "generals/memory.h"
#include "generals/rating.h"
#include "generals/replay.h"

namespace generals {

class Agent {
 public:
  virtual ~Agent() = default;
  virtual ActionVector Act(const Observation& obs, const MemoryState& memory) = 0;
  // True when Act ignores randomness (arg max play).
  virtual bool deterministic() const = 0;
};

struct AgentHandle {
  std::string id;
  // Builds a fresh agent whose random stream is seeded with `seed`.
  std::function<std::unique_ptr<Agent>(std::uint64_t seed)> make;
};

// Uniform over pass and every legal move visible in the observation.
AgentHandle RandomAgentHandle();

// Greedy frontier expansion. Captures the cheapest reachable cells, with
// extra weight on cells taken just before a land bonus, and otherwise
// marches its largest stack toward the enemy general, enemy land or
// unexplored ground.
AgentHandle ExpanderAgentHandle();

// Always passes.
AgentHandle IdleAgentHandle();

// "random", "expander" or "idle"; nullopt otherwise.
std::optional<AgentHandle> AgentByName(std::string_view name);

struct MatchResult {
  std::array<std::string, kNumPlayers> seats;
  std::optional<PlayerId> winner;  // seat index; nullopt = draw by truncation
  int ticks = 0;
  Scoreboard final_scoreboard{};
  std::uint64_t final_hash = 0;
  std::optional<ReplayLog> replay;
};

struct MatchOptions {
  bool record = false;
  bool digests = true;
};

// `first` plays seat 0. Map and agent streams derive from `seed`.
MatchResult RunMatch(const AgentHandle& first, const AgentHandle& second,
                     const EnvConfig& config, std::uint64_t seed,
                     const MatchOptions& options = {});

struct SeriesGame {
  int index = 0;
  bool a_first = true;
  std::uint64_t seed = 0;
  std::optional<int> winner;  // 0 = agent a, 1 = agent b, nullopt = draw
  int ticks = 0;
  std::uint64_t final_hash = 0;
  std::optional<ReplayLog> replay;
};

struct SeriesResult {
  std::string a;
  std::string b;
  int games = 0;
  int wins_a = 0;
  int wins_b = 0;
  int draws = 0;
  double score_a = 0.0;  // draws count half
  Interval ci;
  std::vector<SeriesGame> per_game;
};

// Games 2k and 2k+1 share a map with sides swapped. Games run in parallel on
// `pool`; the result does not depend on scheduling.
SeriesResult RunSeries(const AgentHandle& a, const AgentHandle& b, int n_games,
                       const EnvConfig& config, std::uint64_t master_seed,
                       const MatchOptions& options = {},
                       int num_workers = -1);

struct TournamentResult {
  std::vector<std::string> agents;
  std::vector<SeriesResult> pairs;  // (i, j) with i < j in row-major order
  WinRateMatrix matrix;
  std::optional<std::string> anchor;
  std::vector<double> ratings;  // empty without an anchor
};

struct TournamentOptions {
  int games_per_pair = 100;
  std::optional<std::string> anchor;
  double anchor_rating = 1500.0;
  // Pseudo-games added to every pair before fitting ratings.
  double elo_smoothing = 1.0;
};

TournamentResult RunTournament(const std::vector<AgentHandle>& agents,
                               const EnvConfig& config,
                               std::uint64_t master_seed,
                               const TournamentOptions& options,
                               const MatchOptions& match_options = {},
                               int num_workers = -1);

}  // namespace generals

#endif  // GENERALS_ARENA_H_
