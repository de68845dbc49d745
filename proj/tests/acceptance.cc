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


// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "generals/arena.h"
#include "generals/bench.h"
#include "generals/mapgen.h"
#include "generals/rating.h"
#include "generals/replay.h"
#include "generals/rewards.h"
#include "properties.h"

namespace generals {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  std::function<Outcome()> run;
};

std::string Format(const char* fmt, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

Outcome WilsonReproduction() {
  const Interval ci = WilsonInterval(290, 529, 1.96);
  const bool pass = std::abs(ci.lo - 0.5056) <= 1e-4 && std::abs(ci.hi - 0.5901) <= 1e-4;
  return {pass, Format("(290, 529) -> [%.4f, %.4f]", ci.lo, ci.hi)};
}

Outcome EloReproduction() {
  const std::vector<std::vector<std::optional<double>>> rates{
      {std::nullopt, 0.04}, {0.96, std::nullopt}};
  const std::vector<double> r = FitEloFromRates(rates, 0, 1500);
  const double gap = EloFromWinrate(0.5482);
  const bool pass = r[0] == 1500.0 && std::abs(r[1] - 2052) <= 1.0 &&
                    std::abs(gap - 33.6) <= 0.5;
  return {pass, Format("96%% vs anchor 1500 -> %.2f; 54.82%% -> %+.2f", r[1], gap)};
}

Outcome MapStatistics() {
  const MapSpec spec;
  int valid = 0;
  double min_frac = 1, max_frac = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const GridLayout layout = Generate(spec, seed);
    valid += Validate(layout, spec).empty();
    min_frac = std::min(min_frac, MountainFraction(layout));
    max_frac = std::max(max_frac, MountainFraction(layout));
  }
  return {valid == 1000, Format("%.0f/1000 valid, mountain fraction %.3f..%.3f", valid,
                                min_frac, max_frac)};
}

Outcome Determinism() {
  int verified = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    MatchOptions opts;
    opts.record = true;
    opts.digests = seed % 2 == 0;
    const MatchResult m =
        RunMatch(RandomAgentHandle(), RandomAgentHandle(), EnvConfig{}, 1000 + seed, opts);
    const std::string path = std::string(GENERALS_ACCEPTANCE_WORK_DIR) + "/replay.jsonl";
    SaveReplay(*m.replay, path);
    const VerifyOutcome v = VerifyReplay(LoadReplay(path));
    verified += v.verified && v.final_hash == m.final_hash;
  }
  std::ifstream in(GENERALS_TEST_DATA_DIR "/golden_match.jsonl", std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string golden = buf.str();
  bool golden_ok = false;
  try {
    MatchOptions opts;
    opts.record = true;
    const MatchResult m =
        RunMatch(ExpanderAgentHandle(), RandomAgentHandle(), EnvConfig{}, 2026, opts);
    golden_ok = !golden.empty() && SerializeReplay(*m.replay) == golden &&
                VerifyReplay(ParseReplay(golden)).verified;
  } catch (const std::exception&) {
    golden_ok = false;
  }
  Outcome out{verified == 100 && golden_ok,
              Format("%.0f/100 replays verified", verified)};
  out.detail += golden_ok ? ", golden replay byte-identical" : ", golden replay MISMATCH";
  return out;
}

Outcome ShapingInvariance() {
  double worst = 0.0;
  int rollouts = 0, terminated = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (double gamma : {1.0, 0.99}) {
      // Odd seeds use a small board so that some rollouts end in a capture.
      const auto c = testing::CheckTelescoping(seed, gamma, seed % 2 == 1, 2000);
      worst = std::max(worst, c.residual);
      terminated += c.terminated;
      ++rollouts;
    }
  }
  const ShapingConfig cfg;
  int bound_violations = 0, asym_violations = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const GridState s = testing::ScrambledState(seed);
    const double a = Potential(ExtractPotentialInputs(s, 0), cfg);
    const double b = Potential(ExtractPotentialInputs(s, 1), cfg);
    bound_violations += std::abs(a) > 1.0 || std::abs(b) > 1.0;
    asym_violations += std::abs(a + b) > 1e-12;
  }
  Outcome out{worst <= 1e-9 && bound_violations == 0 && asym_violations == 0, ""};
  out.detail = Format("%.0f rollouts (%.0f ended by capture), max residual %.2e", rollouts,
                      terminated, worst) +
               Format("; 10000 states: %.0f bound, %.0f antisymmetry violations",
                      bound_violations, asym_violations);
  return out;
}

Outcome RulesConformance() {
  const testing::CombatTableCheck table = testing::CheckCombatTable(50);
  const int growth_failures = testing::CheckGrowthAccounting(7, 500);
  return {table.mismatches == 0 && growth_failures == 0,
          Format("%.0f combat cases, %.0f mismatches; 500 growth windows, %.0f failures",
                 table.cases, table.mismatches, growth_failures)};
}

Outcome Throughput() {
  BenchOptions opts;
  opts.height = 24;
  opts.width = 24;
  opts.batch = 8;
  opts.duration_seconds = 10.0;
  const BenchReport r = RunBench(opts);
  return {r.steps_per_second() >= 3500.0,
          Format("batch 8, 24x24: %.0f half-turn steps/s over %.1f s (%.0f hardware threads)",
                 r.steps_per_second(), r.elapsed_seconds,
                 std::thread::hardware_concurrency())};
}

Outcome PoolSubstitute() {
  OpponentPool gate(PoolConfig{}, {"p0", "p1", "p2"});
  const PoolDecision at = gate.Offer("at_gate", 0.45);
  const PoolDecision below = gate.Offer("below_gate", 0.449);
  const bool gate_ok = at.accepted && at.evicted == "p0" && !below.accepted &&
                       gate.members() == std::vector<std::string>{"p1", "p2", "at_gate"};
  OpponentPool fifo(PoolConfig{}, {"p0", "p1", "p2"});
  for (int c = 1; c <= 5; ++c) fifo.Offer("c" + std::to_string(c), 0.6);
  const bool fifo_ok = fifo.members() == std::vector<std::string>{"c3", "c4", "c5"};
  return {gate_ok && fifo_ok,
          std::string("training and ladder results are out of scope; pool gate ") +
              (gate_ok ? "ok" : "BROKEN") + ", FIFO trace " + (fifo_ok ? "ok" : "BROKEN")};
}

}  // namespace
}  // namespace generals

int main() {
  using namespace generals;
  std::filesystem::create_directories(GENERALS_ACCEPTANCE_WORK_DIR);
  const std::vector<Criterion> criteria{
      {"Wilson reproduction", WilsonReproduction},
      {"Elo reproduction", EloReproduction},
      {"Map statistics", MapStatistics},
      {"Determinism", Determinism},
      {"Shaping invariance", ShapingInvariance},
      {"Rules conformance", RulesConformance},
      {"Throughput", Throughput},
      {"Desk-scale substitutes (opponent pool)", PoolSubstitute},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
