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


#include <fstream>
#include <sstream>

#include "doctest.h"
#include "generals/arena.h"
#include "generals/replay.h"
#include "generals/rng.h"
#include "test_util.h"

namespace generals {
namespace {

constexpr const char* kGoldenPath = GENERALS_TEST_DATA_DIR "/golden_match.jsonl";
constexpr const char* kGoldenFinalHash = "7606d51c719d0297";
constexpr std::uint64_t kGoldenSeed = 2026;

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ReplayLog RandomGame(std::uint64_t seed, int truncation, bool digests) {
  EnvConfig cfg;
  cfg.truncation_ticks = truncation;
  MatchOptions opts;
  opts.record = true;
  opts.digests = digests;
  return *RunMatch(RandomAgentHandle(), RandomAgentHandle(), cfg, seed, opts).replay;
}

TEST_CASE("Empty game round-trips") {
  Env env(EnvConfig{});
  env.Reset(3);
  ReplayLog log;
  log.header = MakeReplayHeader(env, 3, {"a", "b"}, false);
  RecordResult(log, env.state());
  const std::string text = SerializeReplay(log);
  const ReplayLog back = ParseReplay(text);
  CHECK(back == log);
  CHECK(SerializeReplay(back) == text);
  CHECK(VerifyReplay(back).verified);
}

TEST_CASE("500-tick game round-trips byte for byte") {
  const ReplayLog log = RandomGame(8, 500, true);
  CHECK(log.records.size() == 500);
  const std::string text = SerializeReplay(log);
  CHECK(SerializeReplay(log) == text);
  const ReplayLog back = ParseReplay(text);
  CHECK(back == log);
  CHECK(SerializeReplay(back) == text);
}

TEST_CASE("Fresh recordings verify with the live hash") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EnvConfig cfg;
    cfg.truncation_ticks = 300;
    MatchOptions opts;
    opts.record = true;
    opts.digests = seed % 2 == 0;
    const MatchResult m =
        RunMatch(ExpanderAgentHandle(), RandomAgentHandle(), cfg, seed, opts);
    const ReplayLog back = ParseReplay(SerializeReplay(*m.replay));
    const VerifyOutcome v = VerifyReplay(back);
    REQUIRE(v.verified);
    REQUIRE(v.final_hash == m.final_hash);
  }
}

TEST_CASE("A flipped action is caught at its tick") {
  ReplayLog log = RandomGame(4, 200, true);
  // Find a tick where player 0 made a real move and turn it into a pass.
  int flipped_tick = -1;
  for (ReplayRecord& r : log.records) {
    if (r.actions[0][0] == 0 && r.tick > 20) {
      r.actions[0][0] = 1;
      flipped_tick = r.tick;
      break;
    }
  }
  REQUIRE(flipped_tick > 0);
  const VerifyOutcome v = VerifyReplay(log);
  CHECK_FALSE(v.verified);
  CHECK(v.divergence_tick == flipped_tick);

  ReplayLog no_digests = RandomGame(4, 200, false);
  for (ReplayRecord& r : no_digests.records) {
    if (r.actions[0][0] == 0 && r.tick > 20) {
      r.actions[0][0] = 1;
      break;
    }
  }
  CHECK_FALSE(VerifyReplay(no_digests).verified);
}

TEST_CASE("Malformed replays are rejected") {
  const std::string text = SerializeReplay(RandomGame(5, 50, true));
  SUBCASE("truncated") {
    CHECK_THROWS_AS(ParseReplay(text.substr(0, text.size() / 2)), CorruptReplay);
    CHECK_THROWS_AS(ParseReplay(text.substr(0, text.size() - 1)), CorruptReplay);
  }
  SUBCASE("empty") { CHECK_THROWS_AS(ParseReplay(""), CorruptReplay); }
  SUBCASE("bad version") {
    std::string bad = text;
    bad.replace(bad.find("\"format_version\":1"), 18, "\"format_version\":9");
    CHECK_THROWS_AS(ParseReplay(bad), CorruptReplay);
  }
  SUBCASE("non-monotone ticks") {
    std::string bad = text;
    bad.replace(bad.find("\"tick\":3,"), 9, "\"tick\":9,");
    CHECK_THROWS_AS(ParseReplay(bad), CorruptReplay);
  }
  SUBCASE("trailing content") {
    CHECK_THROWS_AS(ParseReplay(text + "{}\n"), CorruptReplay);
  }
  SUBCASE("malformed json") {
    std::string bad = text;
    bad.insert(bad.find('\n') + 1, "{oops\n");
    CHECK_THROWS_AS(ParseReplay(bad), CorruptReplay);
  }
}

TEST_CASE("Recording enforces consecutive ticks") {
  Env env(EnvConfig{});
  env.Reset(1);
  ReplayLog log;
  log.header = MakeReplayHeader(env, 1, {"a", "b"}, false);
  const ActionVector pass{1, 0, 0, 0, 0};
  RecordStep(log, 1, {pass, pass});
  CHECK_THROWS_AS(RecordStep(log, 3, {pass, pass}), std::invalid_argument);
}

TEST_CASE("State reconstruction at a tick") {
  const ReplayLog log = RandomGame(6, 120, true);
  EnvConfig cfg;
  cfg.map = MapText{log.header.map};
  Env env(cfg);
  env.Reset(0);
  for (int t = 0; t < 60; ++t) env.Step(log.records[t].actions);
  CHECK(ReplayStateAt(log, 60) == env.state());
}

TEST_CASE("Golden replay") {
  const std::string golden = ReadAll(kGoldenPath);
  REQUIRE_FALSE(golden.empty());
  const ReplayLog log = ParseReplay(golden);
  const VerifyOutcome v = VerifyReplay(log);
  CHECK(v.verified);
  CHECK(HashToHex(v.final_hash) == kGoldenFinalHash);
  // Re-recording the same match reproduces the file exactly.
  MatchOptions opts;
  opts.record = true;
  const MatchResult m = RunMatch(ExpanderAgentHandle(), RandomAgentHandle(),
                                 EnvConfig{}, kGoldenSeed, opts);
  CHECK(SerializeReplay(*m.replay) == golden);
}

}  // namespace
}  // namespace generals
