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


#include "doctest.h"
#include "generals/arena.h"
#include "generals/replay.h"

namespace generals {
namespace {

TEST_CASE("Random matches are reproducible") {
  EnvConfig cfg;
  cfg.truncation_ticks = 600;
  const MatchResult a = RunMatch(RandomAgentHandle(), RandomAgentHandle(), cfg, 17);
  const MatchResult b = RunMatch(RandomAgentHandle(), RandomAgentHandle(), cfg, 17);
  CHECK(a.winner == b.winner);
  CHECK(a.ticks == b.ticks);
  CHECK(a.final_hash == b.final_hash);
  CHECK(a.final_scoreboard == b.final_scoreboard);
  const MatchResult c = RunMatch(RandomAgentHandle(), RandomAgentHandle(), cfg, 18);
  CHECK(c.final_hash != a.final_hash);
}

TEST_CASE("Truncation is a draw") {
  EnvConfig cfg;
  cfg.truncation_ticks = 40;
  const MatchResult m = RunMatch(IdleAgentHandle(), IdleAgentHandle(), cfg, 1);
  CHECK_FALSE(m.winner.has_value());
  CHECK(m.ticks == 40);
  CHECK(m.seats == std::array<std::string, 2>{"idle", "idle"});
}

TEST_CASE("Agents act only on legal moves or passes") {
  EnvConfig cfg;
  cfg.truncation_ticks = 400;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    MatchOptions opts;
    opts.record = true;
    const MatchResult m =
        RunMatch(ExpanderAgentHandle(), RandomAgentHandle(), cfg, seed, opts);
    GridState s = InitialStateFromHeader(m.replay->header);
    for (const ReplayRecord& r : m.replay->records) {
      for (PlayerId p = 0; p < kNumPlayers; ++p) {
        const DecodedAction d = DecodeAction(r.actions[p], s.height(), s.width());
        REQUIRE_FALSE(d.out_of_range);
        // Validity against the pre-move state; the second mover may be
        // invalidated by the first, which the rules allow.
        if (p == FirstMover(s.tick())) {
          REQUIRE(ValidateMove(s, p, d.move) == MoveVerdict::kValid);
        }
      }
      ApplyHalfTurn(s, {DecodeAction(r.actions[0], s.height(), s.width()).move,
                        DecodeAction(r.actions[1], s.height(), s.width()).move});
    }
  }
}

TEST_CASE("Expander beats Random in more than 90% of 200 matches") {
  const SeriesResult s =
      RunSeries(ExpanderAgentHandle(), RandomAgentHandle(), 200, EnvConfig{}, 42);
  CHECK(s.games == 200);
  MESSAGE("expander wins " << s.wins_a << " / 200, draws " << s.draws);
  CHECK(s.wins_a / 200.0 > 0.9);
}

TEST_CASE("Series bookkeeping") {
  EnvConfig cfg;
  cfg.truncation_ticks = 300;
  const SeriesResult s =
      RunSeries(ExpanderAgentHandle(), RandomAgentHandle(), 10, cfg, 5, {}, 2);
  CHECK(s.wins_a + s.wins_b + s.draws == 10);
  CHECK(s.score_a == doctest::Approx((s.wins_a + 0.5 * s.draws) / 10.0));
  CHECK(s.ci.lo <= s.score_a);
  CHECK(s.ci.hi >= s.score_a);
  for (int g = 0; g < 10; ++g) {
    CHECK(s.per_game[g].index == g);
    CHECK(s.per_game[g].a_first == (g % 2 == 0));
    CHECK(s.per_game[g].seed == s.per_game[g - g % 2].seed);
  }
  CHECK_THROWS_AS(RunSeries(ExpanderAgentHandle(), RandomAgentHandle(), 0, cfg, 5),
                  std::invalid_argument);
}

TEST_CASE("Series results do not depend on the worker count") {
  EnvConfig cfg;
  cfg.truncation_ticks = 300;
  const SeriesResult one =
      RunSeries(RandomAgentHandle(), ExpanderAgentHandle(), 8, cfg, 9, {}, 1);
  const SeriesResult many =
      RunSeries(RandomAgentHandle(), ExpanderAgentHandle(), 8, cfg, 9, {}, 4);
  for (int g = 0; g < 8; ++g) {
    CHECK(one.per_game[g].final_hash == many.per_game[g].final_hash);
    CHECK(one.per_game[g].winner == many.per_game[g].winner);
  }
}

TEST_CASE("Side swap with symmetric agents") {
  // Idle agents never move, so each mirrored pair draws identically.
  EnvConfig cfg;
  cfg.truncation_ticks = 30;
  const SeriesResult s = RunSeries(IdleAgentHandle(), IdleAgentHandle(), 2, cfg, 3);
  CHECK(s.draws == 2);
  CHECK(s.score_a == 0.5);
}

TEST_CASE("Round robin with an anchored rating") {
  EnvConfig cfg;
  cfg.truncation_ticks = 500;
  TournamentOptions opts;
  opts.games_per_pair = 10;
  opts.anchor = "random";
  const TournamentResult t = RunTournament(
      {ExpanderAgentHandle(), RandomAgentHandle(), IdleAgentHandle()}, cfg, 1, opts);
  CHECK(t.pairs.size() == 3);
  REQUIRE(t.ratings.size() == 3);
  CHECK(t.ratings[1] == 1500.0);
  CHECK(t.ratings[0] > 1500.0);
  CHECK_THROWS_AS(RunTournament({RandomAgentHandle(), RandomAgentHandle()}, cfg, 1, opts),
                  std::invalid_argument);
}

TEST_CASE("Agent lookup") {
  CHECK(AgentByName("random")->id == "random");
  CHECK(AgentByName("expander")->id == "expander");
  CHECK(AgentByName("idle")->id == "idle");
  CHECK_FALSE(AgentByName("human").has_value());
}

}  // namespace
}  // namespace generals
