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

// Command-line harness: map generation, matches and tournaments, throughput
// benchmarking, scripted rollouts and replay tools.
//
// Exit codes: 0 success, 1 domain failure (divergence, invalid map,
// infeasible spec), 2 usage or configuration error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "generals/arena.h"
#include "generals/bench.h"
#include "generals/env.h"
#include "generals/mapgen.h"
#include "generals/replay.h"
#include "generals/report.h"
#include "generals/run_config.h"

namespace {

using namespace generals;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Raised for bad flags or configs; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string map_path;
  std::string out_dir;
  std::optional<int> games;
  std::string format = "text";
};

RunConfig LoadConfig(const Common& c) {
  RunConfig rc;
  try {
    if (!c.config_path.empty()) rc = LoadRunConfig(c.config_path);
    if (!c.map_path.empty()) {
      rc.env.map = MapText{ReadFile(c.map_path)};
    }
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  if (c.seed) rc.seed = *c.seed;
  if (!c.out_dir.empty()) rc.out_dir = c.out_dir;
  if (c.games) {
    if (*c.games < 1) throw UsageError("--games must be >= 1");
    rc.games = *c.games;
  }
  return rc;
}

std::vector<AgentHandle> ResolveAgents(const RunConfig& rc, std::size_t min_count) {
  if (rc.agents.size() < min_count) {
    throw UsageError("config needs at least " + std::to_string(min_count) +
                     " agents");
  }
  std::vector<AgentHandle> out;
  for (const std::string& name : rc.agents) {
    if (std::count(rc.agents.begin(), rc.agents.end(), name) > 1) {
      throw UsageError("agent '" + name + "' listed twice");
    }
    auto handle = AgentByName(name);
    if (!handle) throw UsageError("unknown agent '" + name + "'");
    out.push_back(*handle);
  }
  return out;
}

void Emit(const std::string& format, const std::string& json_text,
          const std::string& text) {
  std::cout << (format == "json" ? json_text : text);
}

void AddCommonFlags(CLI::App* cmd, Common& c, bool with_games) {
  cmd->add_option("--config,--spec", c.config_path, "RunConfig JSON file");
  cmd->add_option("--seed", c.seed, "master seed (overrides config)");
  cmd->add_option("--map", c.map_path, "map text file (overrides config)");
  cmd->add_option("--out", c.out_dir, "output directory for reports and replays");
  if (with_games) cmd->add_option("--games", c.games, "games per pair");
  cmd->add_option("--format", c.format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}));
}

int CmdGenerateMap(const std::string& spec_path, std::uint64_t seed,
                   const std::string& out, MapSpec spec_flags, bool spec_given) {
  MapSpec spec = spec_flags;
  if (spec_given) {
    try {
      spec = ParseMapSpec(ReadFile(spec_path));
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }
  try {
    spec.Validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  GridLayout layout;
  try {
    layout = Generate(spec, seed);
  } catch (const GenerationExhausted& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitDomain;
  }
  const auto violations = Validate(layout, spec);
  if (!violations.empty()) {
    for (const auto& v : violations) {
      std::cerr << ToString(v.code) << ": " << v.detail << "\n";
    }
    return kExitDomain;
  }
  const std::string text = SerializeMapText(layout);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    WriteFile(out, text);
  }
  return kExitOk;
}

int CmdMatch(const Common& c) {
  RunConfig rc = LoadConfig(c);
  auto agents = ResolveAgents(rc, 2);
  MatchOptions opts;
  opts.record = rc.write_replays;
  MatchResult m = RunMatch(agents[0], agents[1], rc.env, rc.seed, opts);
  const std::string json_report = MatchReportJson(m, rc.seed);
  if (!rc.out_dir.empty()) {
    WriteFile(fs::path(rc.out_dir) / "report.json", json_report);
    if (m.replay) SaveReplay(*m.replay, (fs::path(rc.out_dir) / "match.jsonl").string());
  }
  Emit(c.format, json_report, MatchReportText(m, rc.seed));
  return kExitOk;
}

void WriteSeriesReplays(const SeriesResult& s, const fs::path& dir) {
  for (const SeriesGame& g : s.per_game) {
    if (!g.replay) continue;
    char name[64];
    std::snprintf(name, sizeof(name), "%s_vs_%s_%04d.jsonl", s.a.c_str(),
                  s.b.c_str(), g.index);
    fs::create_directories(dir);
    SaveReplay(*g.replay, (dir / name).string());
  }
}

int CmdTournament(const Common& c, bool series_only) {
  RunConfig rc = LoadConfig(c);
  auto agents = ResolveAgents(rc, 2);
  if (series_only) agents.resize(2);
  TournamentOptions topts;
  topts.games_per_pair = rc.games;
  if (rc.elo) {
    topts.anchor = rc.elo->anchor;
    topts.anchor_rating = rc.elo->rating;
    topts.elo_smoothing = rc.elo->smoothing;
    const bool known = std::any_of(agents.begin(), agents.end(), [&](const AgentHandle& a) {
      return a.id == rc.elo->anchor;
    });
    if (!known) throw UsageError("elo anchor '" + rc.elo->anchor + "' is not playing");
  }
  MatchOptions mopts;
  mopts.record = rc.write_replays;
  TournamentResult t =
      RunTournament(agents, rc.env, rc.seed, topts, mopts, rc.workers);
  const std::string json_report = TournamentReportJson(t, rc.seed);
  if (!rc.out_dir.empty()) {
    WriteFile(fs::path(rc.out_dir) / "report.json", json_report);
    for (const SeriesResult& s : t.pairs) {
      WriteSeriesReplays(s, fs::path(rc.out_dir) / "replays");
    }
  }
  Emit(c.format, json_report, TournamentReportText(t, rc.seed));
  return kExitOk;
}

int CmdBench(const BenchOptions& opts, const std::string& format,
             const std::string& out_dir) {
  if (opts.height < 1 || opts.width < 1 || opts.batch < 1 ||
      opts.duration_seconds < 0) {
    throw UsageError("bench needs positive grid, batch and a non-negative duration");
  }
  BenchReport r = RunBench(opts);
  const std::string json_report = BenchReportJson(r);
  if (!out_dir.empty()) WriteFile(fs::path(out_dir) / "bench.json", json_report);
  Emit(format, json_report, BenchReportText(r));
  return kExitOk;
}

int CmdReplayVerify(const std::string& path, const std::string& format) {
  ReplayLog log = LoadReplay(path);
  VerifyOutcome v = VerifyReplay(log);
  nlohmann::json j = {{"format_version", kReportFormatVersion},
                      {"type", "verify"},
                      {"verified", v.verified},
                      {"final_hash", HashToHex(v.final_hash)}};
  std::string text;
  if (v.verified) {
    text = "Verified " + HashToHex(v.final_hash) + "\n";
  } else {
    j["divergence_tick"] = v.divergence_tick;
    j["detail"] = v.detail;
    text = "Divergence at tick " + std::to_string(v.divergence_tick) + ": " +
           v.detail + "\n";
  }
  Emit(format, j.dump() + "\n", text);
  return v.verified ? kExitOk : kExitDomain;
}

int CmdReplayRender(const std::string& path, const std::string& perspective,
                    const std::string& out_dir, std::optional<int> only_tick) {
  ReplayLog log = LoadReplay(path);
  std::optional<PlayerId> view;
  if (perspective == "player0") view = 0;
  if (perspective == "player1") view = 1;
  GridState state = InitialStateFromHeader(log.header);
  auto emit = [&](const GridState& s) {
    if (only_tick && *only_tick != s.tick()) return;
    const std::string frame = RenderBoard(s, view);
    if (out_dir.empty()) {
      std::cout << frame << "\n";
    } else {
      char name[32];
      std::snprintf(name, sizeof(name), "frame_%06d.txt", s.tick());
      WriteFile(fs::path(out_dir) / name, frame);
    }
  };
  emit(state);
  for (const ReplayRecord& r : log.records) {
    const JointMove moves{DecodeAction(r.actions[0], state.height(), state.width()).move,
                          DecodeAction(r.actions[1], state.height(), state.width()).move};
    ApplyHalfTurn(state, moves);
    emit(state);
  }
  return kExitOk;
}

// Plays a scripted action sequence (one JSON line per tick: [[5 ints],[5
// ints]]) and prints the reward stream and state digests. Used for parity
// checks against other front ends.
int CmdRollout(const Common& c, const std::string& actions_path,
               bool dump_observations) {
  RunConfig rc = LoadConfig(c);
  Env env(rc.env);
  ResetResult reset = env.Reset(rc.seed);
  nlohmann::json out = {{"format_version", kReportFormatVersion},
                        {"type", "rollout"},
                        {"seed", rc.seed},
                        {"initial_hash", HashToHex(StateHash(env.state()))}};
  nlohmann::json steps = nlohmann::json::array();
  auto obs_json = [](const Observation& o) {
    return nlohmann::json{{"tick", o.tick},
                          {"visible_army", o.visible_army},
                          {"owned_by_self", o.owned_by_self},
                          {"owned_by_opponent", o.owned_by_opponent},
                          {"neutral_visible", o.neutral_visible},
                          {"visible_mountain", o.visible_mountain},
                          {"visible_castle", o.visible_castle},
                          {"visible_general", o.visible_general},
                          {"fog", o.fog},
                          {"own_land", o.self_stats().land},
                          {"own_army", o.self_stats().army},
                          {"opponent_land", o.opponent_stats().land},
                          {"opponent_army", o.opponent_stats().army}};
  };
  if (dump_observations) {
    out["initial_observations"] = {obs_json(reset.observations[0]),
                                   obs_json(reset.observations[1])};
  }
  std::istringstream lines(ReadFile(actions_path));
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (env.done()) break;
    JointAction actions;
    try {
      actions = nlohmann::json::parse(line).get<JointAction>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("actions line " + std::to_string(line_no) + ": " + e.what());
    }
    StepResult r = env.Step(actions);
    nlohmann::json s = {{"tick", env.state().tick()},
                        {"rewards", r.rewards},
                        {"terminated", r.terminated},
                        {"truncated", r.truncated},
                        {"out_of_range", r.info.action_out_of_range},
                        {"hash", HashToHex(StateHash(env.state()))}};
    if (dump_observations) {
      s["observations"] = {obs_json(r.observations[0]), obs_json(r.observations[1])};
    }
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  out["final_hash"] = HashToHex(StateHash(env.state()));
  const std::string json_report = out.dump() + "\n";
  if (!rc.out_dir.empty()) WriteFile(fs::path(rc.out_dir) / "rollout.json", json_report);
  std::ostringstream text;
  text << "rollout: " << out["steps"].size() << " ticks, final hash "
       << HashToHex(StateHash(env.state())) << "\n";
  Emit(c.format, json_report, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generals arena: game engine, environments and evaluation tools"};
  app.require_subcommand(1);

  // generate-map
  auto* gen = app.add_subcommand("generate-map", "write a validated random map");
  MapSpec gen_spec;
  std::string gen_spec_path, gen_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("--spec", gen_spec_path, "MapSpec JSON file");
  gen->add_option("--seed", gen_seed, "generation seed");
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");
  gen->add_option("--height", gen_spec.height);
  gen->add_option("--width", gen_spec.width);
  gen->add_option("--mountain-density", gen_spec.mountain_density);
  gen->add_option("--mountain-tolerance", gen_spec.mountain_tolerance);
  gen->add_option("--castles-min", gen_spec.castle_count_min);
  gen->add_option("--castles-max", gen_spec.castle_count_max);
  gen->add_option("--garrison-min", gen_spec.garrison_min);
  gen->add_option("--garrison-max", gen_spec.garrison_max);
  gen->add_option("--min-general-distance", gen_spec.min_general_bfs_distance);
  gen->add_option("--castle-radius", gen_spec.castle_within_radius);
  gen->add_option("--max-attempts", gen_spec.max_attempts);

  Common match_c, series_c, tour_c, roll_c;
  auto* match = app.add_subcommand("match", "play one game between the first two agents");
  AddCommonFlags(match, match_c, false);
  auto* series = app.add_subcommand("series", "side-alternating series between the first two agents");
  AddCommonFlags(series, series_c, true);
  auto* tour = app.add_subcommand("tournament", "round robin over all configured agents");
  AddCommonFlags(tour, tour_c, true);

  auto* roll = app.add_subcommand("rollout", "replay a scripted action sequence");
  AddCommonFlags(roll, roll_c, false);
  std::string roll_actions;
  bool roll_dump = false;
  roll->add_option("--actions", roll_actions, "JSON-lines action script")->required();
  roll->add_flag("--dump-observations", roll_dump);

  auto* bench = app.add_subcommand("bench", "throughput benchmark with random agents");
  BenchOptions bench_opts;
  std::string bench_format = "text", bench_out;
  bench->add_option("--height", bench_opts.height);
  bench->add_option("--width", bench_opts.width);
  bench->add_option("--batch", bench_opts.batch);
  bench->add_option("--duration", bench_opts.duration_seconds, "seconds");
  bench->add_option("--seed", bench_opts.seed);
  bench->add_option("--workers", bench_opts.num_workers);
  bench->add_option("--out", bench_out);
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"text", "json"}));

  auto* replay = app.add_subcommand("replay", "verify or render a replay file");
  replay->require_subcommand(1);
  auto* verify = replay->add_subcommand("verify", "re-simulate and compare digests");
  std::string verify_path, verify_format = "text";
  verify->add_option("path", verify_path)->required();
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  auto* render = replay->add_subcommand("render", "print text frames");
  std::string render_path, render_out, perspective = "full";
  std::optional<int> render_tick;
  render->add_option("path", render_path)->required();
  render->add_option("--perspective", perspective)
      ->check(CLI::IsMember({"full", "player0", "player1"}));
  render->add_option("--out", render_out, "write one file per frame here");
  render->add_option("--tick", render_tick, "only this tick");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      return CmdGenerateMap(gen_spec_path, gen_seed, gen_out, gen_spec,
                            !gen_spec_path.empty());
    }
    if (*match) return CmdMatch(match_c);
    if (*series) return CmdTournament(series_c, true);
    if (*tour) return CmdTournament(tour_c, false);
    if (*roll) return CmdRollout(roll_c, roll_actions, roll_dump);
    if (*bench) return CmdBench(bench_opts, bench_format, bench_out);
    if (*verify) return CmdReplayVerify(verify_path, verify_format);
    if (*render) return CmdReplayRender(render_path, perspective, render_out, render_tick);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CorruptReplay& e) {
    std::cerr << "corrupt replay: " << e.what() << "\n";
    return kExitDomain;
  } catch (const MapParseError& e) {
    std::cerr << "map error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const GenerationExhausted& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
