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

#include "generals/arena.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "generals/rng.h"
#include "generals/vec_env.h"

namespace generals {

namespace {

class IdleAgent : public Agent {
 public:
  ActionVector Act(const Observation&, const MemoryState&) override {
    return {1, 0, 0, 0, 0};
  }
  bool deterministic() const override { return true; }
};

bool InGrid(const Observation& obs, Coord c) {
  return c.row >= 0 && c.row < obs.height && c.col >= 0 && c.col < obs.width;
}

class RandomAgent : public Agent {
 public:
  explicit RandomAgent(std::uint64_t seed) : rng_(seed) {}

  ActionVector Act(const Observation& obs, const MemoryState&) override {
    legal_.clear();
    for (int i = 0; i < obs.height * obs.width; ++i) {
      if (!obs.owned_by_self[i] || obs.visible_army[i] < 2) continue;
      const Coord src{i / obs.width, i % obs.width};
      for (int d = 0; d < kNumDirections; ++d) {
        const Coord dst = Neighbor(src, static_cast<Direction>(d));
        if (!InGrid(obs, dst) || obs.visible_mountain[dst.row * obs.width + dst.col]) {
          continue;
        }
        legal_.push_back({0, src.row, src.col, d, 0});
        legal_.push_back({0, src.row, src.col, d, 1});
      }
    }
    const auto pick = rng_.UniformInt(0, static_cast<std::int64_t>(legal_.size()));
    if (pick == static_cast<std::int64_t>(legal_.size())) return {1, 0, 0, 0, 0};
    return legal_[pick];
  }

  bool deterministic() const override { return false; }

 private:
  Rng rng_;
  std::vector<ActionVector> legal_;
};

class ExpanderAgent : public Agent {
 public:
  ActionVector Act(const Observation& obs, const MemoryState& memory) override {
    const int w = obs.width;
    const int n = obs.height * w;
    auto known_mountain = [&](int i) {
      return obs.visible_mountain[i] ||
             memory.revealed(i) == RevealedStructure::kMountain;
    };

    std::optional<int> enemy_general;
    for (int i = 0; i < n; ++i) {
      if (memory.revealed(i) == RevealedStructure::kGeneral &&
          !obs.owned_by_self[i]) {
        enemy_general = i;
      }
    }

    // Best immediate capture.
    const int period = kHalfTurnsPerTurn * kLandBonusPeriodTurns;
    const bool bonus_window = period - obs.tick % period <= kBonusWindowTicks;
    std::optional<ActionVector> capture;
    int capture_army = 0;
    double best = -std::numeric_limits<double>::infinity();
    int largest = -1;
    for (int i = 0; i < n; ++i) {
      if (!obs.owned_by_self[i] || obs.visible_army[i] < 2) continue;
      const int army = obs.visible_army[i];
      if (largest < 0 || army > obs.visible_army[largest]) largest = i;
      const Coord src{i / w, i % w};
      for (int d = 0; d < kNumDirections; ++d) {
        const Coord dst = Neighbor(src, static_cast<Direction>(d));
        if (!InGrid(obs, dst)) continue;
        const int j = dst.row * w + dst.col;
        if (obs.owned_by_self[j] || obs.fog[j] || known_mountain(j)) continue;
        const int defender = obs.visible_army[j];
        if (army - 1 <= defender) continue;
        double score;
        if (obs.owned_by_opponent[j] && obs.visible_general[j]) {
          score = 1e9;
        } else if (obs.owned_by_opponent[j]) {
          score = 1000.0 + defender;
        } else if (obs.visible_castle[j]) {
          score = 500.0;
        } else {
          score = bonus_window ? 800.0 : 100.0;
        }
        // Cheap sources first so big stacks stay together.
        score -= 0.01 * army;
        if (score > best) {
          best = score;
          capture = ActionVector{0, src.row, src.col, d, 0};
          capture_army = army;
        }
      }
    }
    if (largest < 0) return {1, 0, 0, 0, 0};
    if (capture && (best >= 900.0 || bonus_window ||
                    capture_army <= kCheapCaptureArmy)) {
      return *capture;
    }

    // March the largest stack toward a target.
    std::vector<int> targets;
    if (enemy_general) {
      targets.push_back(*enemy_general);
    } else {
      for (int i = 0; i < n; ++i) {
        if (obs.owned_by_opponent[i]) targets.push_back(i);
      }
      if (targets.empty()) {
        for (int i = 0; i < n; ++i) {
          if (!memory.explored(i) && !known_mountain(i)) targets.push_back(i);
        }
      }
    }
    if (!targets.empty()) {
      const int stack = obs.visible_army[largest];
      auto passable = [&](int i) {
        if (known_mountain(i)) return false;
        const bool neutral_castle = (obs.visible_castle[i] ||
                                     memory.revealed(i) == RevealedStructure::kCastle) &&
                                    !obs.owned_by_self[i] && !obs.owned_by_opponent[i];
        return !neutral_castle || stack - 1 > obs.visible_army[i] + 1;
      };
      std::vector<int> dist(n, -1);
      std::vector<int> queue;
      queue.reserve(n);
      for (int t : targets) {
        dist[t] = 0;
        queue.push_back(t);
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        const Coord cu{u / w, u % w};
        for (int d = 0; d < kNumDirections; ++d) {
          const Coord cv = Neighbor(cu, static_cast<Direction>(d));
          if (!InGrid(obs, cv)) continue;
          const int v = cv.row * w + cv.col;
          if (dist[v] >= 0 || !passable(v)) continue;
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
      const Coord src{largest / w, largest % w};
      int best_dir = -1;
      int best_dist = dist[largest] < 0 ? std::numeric_limits<int>::max() : dist[largest];
      for (int d = 0; d < kNumDirections; ++d) {
        const Coord dst = Neighbor(src, static_cast<Direction>(d));
        if (!InGrid(obs, dst)) continue;
        const int j = dst.row * w + dst.col;
        if (dist[j] >= 0 && dist[j] < best_dist) {
          best_dist = dist[j];
          best_dir = d;
        }
      }
      if (best_dir >= 0) return {0, src.row, src.col, best_dir, 0};
    }
    if (capture) return *capture;
    return {1, 0, 0, 0, 0};
  }

  bool deterministic() const override { return true; }

 private:
  static constexpr int kLandBonusPeriodTurns = 25;
  static constexpr int kBonusWindowTicks = 6;
  static constexpr int kCheapCaptureArmy = 3;
};

}  // namespace

AgentHandle RandomAgentHandle() {
  return {"random", [](std::uint64_t seed) -> std::unique_ptr<Agent> {
            return std::make_unique<RandomAgent>(seed);
          }};
}

AgentHandle IdleAgentHandle() {
  return {"idle", [](std::uint64_t) -> std::unique_ptr<Agent> {
            return std::make_unique<IdleAgent>();
          }};
}

AgentHandle ExpanderAgentHandle() {
  return {"expander", [](std::uint64_t) -> std::unique_ptr<Agent> {
            return std::make_unique<ExpanderAgent>();
          }};
}

std::optional<AgentHandle> AgentByName(std::string_view name) {
  if (name == "random") return RandomAgentHandle();
  if (name == "expander") return ExpanderAgentHandle();
  if (name == "idle") return IdleAgentHandle();
  return std::nullopt;
}

MatchResult RunMatch(const AgentHandle& first, const AgentHandle& second,
                     const EnvConfig& config, std::uint64_t seed,
                     const MatchOptions& options) {
  EnvConfig cfg = config;
  cfg.track_memory = true;
  Env env(cfg);
  ResetResult reset = env.Reset(seed);
  std::array<std::unique_ptr<Agent>, kNumPlayers> agents{
      first.make(MixSeed(seed, 1)), second.make(MixSeed(seed, 2))};

  MatchResult result;
  result.seats = {first.id, second.id};
  std::optional<ReplayLog> log;
  if (options.record) {
    log.emplace();
    log->header = MakeReplayHeader(env, seed, result.seats, options.digests);
  }

  std::array<Observation, kNumPlayers> obs = std::move(reset.observations);
  while (!env.done()) {
    JointAction actions;
    for (PlayerId p = 0; p < kNumPlayers; ++p) {
      actions[p] = agents[p]->Act(obs[p], env.memory(p));
    }
    StepResult step = env.Step(actions);
    if (log) {
      std::optional<std::uint64_t> digest;
      if (options.digests) digest = StateHash(env.state());
      RecordStep(*log, env.state().tick(), actions, digest);
    }
    obs = std::move(step.observations);
  }

  result.winner = env.state().winner();
  result.ticks = env.state().tick();
  result.final_scoreboard = env.state().scoreboard();
  result.final_hash = StateHash(env.state());
  if (log) {
    RecordResult(*log, env.state());
    result.replay = std::move(log);
  }
  return result;
}

SeriesResult RunSeries(const AgentHandle& a, const AgentHandle& b, int n_games,
                       const EnvConfig& config, std::uint64_t master_seed,
                       const MatchOptions& options, int num_workers) {
  if (n_games < 1) throw std::invalid_argument("a series needs at least one game");
  SeriesResult out;
  out.a = a.id;
  out.b = b.id;
  out.games = n_games;
  out.per_game.resize(n_games);
  std::vector<std::string> errors(n_games);

  WorkerPool pool(num_workers);
  pool.ParallelFor(n_games, [&](int g) {
    SeriesGame& game = out.per_game[g];
    game.index = g;
    game.a_first = g % 2 == 0;
    game.seed = MixSeed(master_seed, static_cast<std::uint64_t>(g / 2));
    try {
      MatchResult m = game.a_first
                          ? RunMatch(a, b, config, game.seed, options)
                          : RunMatch(b, a, config, game.seed, options);
      if (m.winner) {
        const bool first_won = *m.winner == 0;
        game.winner = first_won == game.a_first ? 0 : 1;
      }
      game.ticks = m.ticks;
      game.final_hash = m.final_hash;
      game.replay = std::move(m.replay);
    } catch (const std::exception& e) {
      errors[g] = e.what();
    }
  });
  for (const std::string& e : errors) {
    if (!e.empty()) throw std::runtime_error("series game failed: " + e);
  }

  for (const SeriesGame& g : out.per_game) {
    if (!g.winner) {
      ++out.draws;
    } else if (*g.winner == 0) {
      ++out.wins_a;
    } else {
      ++out.wins_b;
    }
  }
  const double points = out.wins_a + 0.5 * out.draws;
  out.score_a = points / n_games;
  out.ci = WilsonInterval(points, n_games);
  return out;
}

TournamentResult RunTournament(const std::vector<AgentHandle>& agents,
                               const EnvConfig& config,
                               std::uint64_t master_seed,
                               const TournamentOptions& options,
                               const MatchOptions& match_options,
                               int num_workers) {
  std::vector<std::string> names;
  for (const auto& a : agents) {
    if (std::find(names.begin(), names.end(), a.id) != names.end()) {
      throw std::invalid_argument("duplicate agent id '" + a.id + "'");
    }
    names.push_back(a.id);
  }
  TournamentResult out{names, {}, WinRateMatrix(names), options.anchor, {}};
  std::uint64_t pair_index = 0;
  for (int i = 0; i < static_cast<int>(agents.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(agents.size()); ++j) {
      SeriesResult s = RunSeries(agents[i], agents[j], options.games_per_pair,
                                 config, MixSeed(master_seed, pair_index++),
                                 match_options, num_workers);
      out.matrix.AddCounts(i, j, s.wins_a, s.wins_b, s.draws);
      out.pairs.push_back(std::move(s));
    }
  }
  if (options.anchor) {
    out.ratings = FitElo(out.matrix, out.matrix.IndexOf(*options.anchor),
                         options.anchor_rating, options.elo_smoothing);
  }
  return out;
}

}  // namespace generals
