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

#include "generals/report.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace generals {

using nlohmann::json;

namespace {

json WinnerJson(const std::optional<int>& w) {
  return w ? json(*w) : json(nullptr);
}

std::string Canonical(const json& j) { return j.dump() + "\n"; }

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string MatchReportJson(const MatchResult& m, std::uint64_t seed) {
  json board = json::array();
  for (const PlayerStats& s : m.final_scoreboard) {
    board.push_back({{"land", s.land}, {"army", s.army}});
  }
  return Canonical({{"format_version", kReportFormatVersion},
                    {"type", "match"},
                    {"seed", seed},
                    {"seats", m.seats},
                    {"winner", WinnerJson(m.winner)},
                    {"ticks", m.ticks},
                    {"final_hash", HashToHex(m.final_hash)},
                    {"scoreboard", board}});
}

std::string MatchReportText(const MatchResult& m, std::uint64_t seed) {
  std::ostringstream out;
  out << "match seed " << seed << ": " << m.seats[0] << " vs " << m.seats[1]
      << "\n";
  out << "result: "
      << (m.winner ? m.seats[*m.winner] + " wins" : std::string("draw"))
      << " after " << m.ticks << " ticks\n";
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    out << "  " << m.seats[p] << ": land " << m.final_scoreboard[p].land
        << ", army " << m.final_scoreboard[p].army << "\n";
  }
  out << "final hash " << HashToHex(m.final_hash) << "\n";
  return out.str();
}

std::string TournamentReportJson(const TournamentResult& t, std::uint64_t seed) {
  json pairs = json::array();
  for (const SeriesResult& s : t.pairs) {
    pairs.push_back({{"a", s.a},
                     {"b", s.b},
                     {"games", s.games},
                     {"wins_a", s.wins_a},
                     {"wins_b", s.wins_b},
                     {"draws", s.draws},
                     {"score_a", s.score_a},
                     {"ci_lo", s.ci.lo},
                     {"ci_hi", s.ci.hi}});
  }
  json elo = nullptr;
  if (t.anchor && !t.ratings.empty()) {
    json ratings = json::object();
    for (std::size_t i = 0; i < t.agents.size(); ++i) {
      ratings[t.agents[i]] = t.ratings[i];
    }
    elo = {{"anchor", *t.anchor}, {"ratings", ratings}};
  }
  return Canonical({{"format_version", kReportFormatVersion},
                    {"type", "tournament"},
                    {"seed", seed},
                    {"agents", t.agents},
                    {"pairs", pairs},
                    {"elo", elo}});
}

std::string TournamentReportText(const TournamentResult& t, std::uint64_t seed) {
  std::ostringstream out;
  out << "tournament seed " << seed << ", " << t.agents.size() << " agents\n";
  for (const SeriesResult& s : t.pairs) {
    out << "  " << s.a << " vs " << s.b << ": " << s.wins_a << "-" << s.wins_b
        << "-" << s.draws << " (W-L-D) over " << s.games << " games, score "
        << Fixed(100.0 * s.score_a, 2) << "% [95% CI " << Fixed(100.0 * s.ci.lo, 2)
        << "%, " << Fixed(100.0 * s.ci.hi, 2) << "%]\n";
  }
  if (t.anchor && !t.ratings.empty()) {
    out << "Elo (" << *t.anchor << " anchored):\n";
    for (std::size_t i = 0; i < t.agents.size(); ++i) {
      out << "  " << t.agents[i] << " " << Fixed(t.ratings[i], 1) << "\n";
    }
  }
  return out.str();
}

std::string BenchReportJson(const BenchReport& r) {
  return Canonical({{"format_version", kReportFormatVersion},
                    {"type", "bench"},
                    {"height", r.height},
                    {"width", r.width},
                    {"batch", r.batch},
                    {"duration_seconds", r.duration_seconds},
                    {"elapsed_seconds", r.elapsed_seconds},
                    {"total_steps", r.total_steps},
                    {"episodes", r.episodes},
                    {"per_env_steps", r.per_env_steps},
                    {"steps_per_second", r.steps_per_second()}});
}

std::string BenchReportText(const BenchReport& r) {
  std::ostringstream out;
  out << "bench " << r.height << "x" << r.width << ", batch " << r.batch
      << ", " << Fixed(r.elapsed_seconds, 3) << " s\n";
  out << "  total half-turn steps: " << r.total_steps << " ("
      << r.episodes << " finished episodes)\n";
  out << "  aggregate rate: " << Fixed(r.steps_per_second(), 1)
      << " steps/s\n";
  for (std::size_t i = 0; i < r.per_env_steps.size(); ++i) {
    out << "  env " << i << ": " << r.per_env_steps[i] << " steps\n";
  }
  return out.str();
}

std::string RenderBoard(const GridState& state,
                        std::optional<PlayerId> perspective) {
  std::optional<Observation> obs;
  if (perspective) obs = Observe(state, *perspective);
  std::ostringstream out;
  const Scoreboard& sb = state.scoreboard();
  out << "tick " << state.tick() << "  A: land " << sb[0].land << " army "
      << sb[0].army << " | B: land " << sb[1].land << " army " << sb[1].army
      << "\n";
  for (int r = 0; r < state.height(); ++r) {
    for (int c = 0; c < state.width(); ++c) {
      const int idx = r * state.width() + c;
      if (c > 0) out << ' ';
      if (obs && obs->fog[idx]) {
        out << "~~~~~~";
        continue;
      }
      const Cell& cell = state.at(idx);
      if (cell.kind == CellKind::kMountain) {
        out << "######";
        continue;
      }
      const char owner = cell.owner == kNeutral ? '.' : static_cast<char>('A' + cell.owner);
      const char kind = cell.kind == CellKind::kGeneral  ? 'G'
                        : cell.kind == CellKind::kCastle ? 'C'
                                                         : ' ';
      char buf[8];
      std::snprintf(buf, sizeof(buf), "%c%c%4d", owner, kind, cell.army);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace generals
