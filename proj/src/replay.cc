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

#include "generals/replay.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "generals/mapgen.h"

namespace generals {

using nlohmann::json;

namespace {

json RulesToJson(const RulesConfig& r) {
  return {{"growth_interval_turns", r.growth_interval_turns},
          {"castle_garrison_min", r.castle_garrison_min},
          {"castle_garrison_max", r.castle_garrison_max}};
}

RulesConfig RulesFromJson(const json& j) {
  RulesConfig r;
  r.growth_interval_turns = j.at("growth_interval_turns").get<int>();
  r.castle_garrison_min = j.at("castle_garrison_min").get<int>();
  r.castle_garrison_max = j.at("castle_garrison_max").get<int>();
  return r;
}

json ShapingToJson(const ShapingConfig& s) {
  return {{"gamma", s.gamma},
          {"max_ratio", s.max_ratio},
          {"w_land", s.w_land},
          {"w_army", s.w_army},
          {"w_castle", s.w_castle}};
}

ShapingConfig ShapingFromJson(const json& j) {
  ShapingConfig s;
  s.gamma = j.at("gamma").get<double>();
  s.max_ratio = j.at("max_ratio").get<double>();
  s.w_land = j.at("w_land").get<double>();
  s.w_army = j.at("w_army").get<double>();
  s.w_castle = j.at("w_castle").get<double>();
  return s;
}

std::uint64_t ParseHex(const std::string& s) {
  if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos) {
    throw CorruptReplay("malformed digest '" + s + "'");
  }
  return std::stoull(s, nullptr, 16);
}

}  // namespace

ReplayHeader MakeReplayHeader(const Env& env, std::uint64_t seed,
                              std::array<std::string, kNumPlayers> players,
                              bool digests) {
  ReplayHeader h;
  h.height = env.layout().height;
  h.width = env.layout().width;
  h.map = SerializeMapText(env.layout());
  h.rules = env.config().rules;
  h.truncation_ticks = env.config().truncation_ticks;
  h.shaping = env.config().shaping;
  h.players = std::move(players);
  h.seed = seed;
  h.digests = digests;
  return h;
}

void RecordStep(ReplayLog& log, int tick, const JointAction& actions,
                std::optional<std::uint64_t> digest) {
  const int expected = log.records.empty() ? 1 : log.records.back().tick + 1;
  if (tick != expected) {
    throw std::invalid_argument("replay tick " + std::to_string(tick) +
                                " does not follow " +
                                std::to_string(expected - 1));
  }
  log.records.push_back({tick, actions, digest});
}

void RecordResult(ReplayLog& log, const GridState& final_state) {
  log.result = ReplayResult{final_state.tick(), final_state.winner(),
                            StateHash(final_state)};
}

std::string SerializeReplay(const ReplayLog& log) {
  std::string out;
  const ReplayHeader& h = log.header;
  json header = {{"type", "header"},
                 {"format_version", h.format_version},
                 {"height", h.height},
                 {"width", h.width},
                 {"map", h.map},
                 {"rules", RulesToJson(h.rules)},
                 {"truncation_ticks", h.truncation_ticks},
                 {"shaping", h.shaping ? ShapingToJson(*h.shaping) : json(nullptr)},
                 {"players", h.players},
                 {"seed", h.seed},
                 {"digests", h.digests}};
  out += header.dump();
  out += '\n';
  for (const ReplayRecord& r : log.records) {
    json rec = {{"type", "step"}, {"tick", r.tick}, {"actions", r.actions}};
    if (r.digest) rec["digest"] = HashToHex(*r.digest);
    out += rec.dump();
    out += '\n';
  }
  if (log.result) {
    json res = {{"type", "result"},
                {"ticks", log.result->ticks},
                {"winner", log.result->winner ? json(*log.result->winner)
                                              : json(nullptr)},
                {"final_hash", HashToHex(log.result->final_hash)}};
    out += res.dump();
    out += '\n';
  }
  return out;
}

ReplayLog ParseReplay(std::string_view text) {
  ReplayLog log;
  std::size_t pos = 0;
  int line_no = 0;
  bool have_header = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      throw CorruptReplay("line " + std::to_string(line_no + 1) +
                          ": missing line terminator (truncated file?)");
    }
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (log.result) throw CorruptReplay(where + "content after result line");
    try {
      const json j = json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (!have_header) {
        if (type != "header") throw CorruptReplay(where + "expected header");
        ReplayHeader& h = log.header;
        h.format_version = j.at("format_version").get<int>();
        if (h.format_version != kReplayFormatVersion) {
          throw CorruptReplay(where + "unsupported format_version " +
                              std::to_string(h.format_version));
        }
        h.height = j.at("height").get<int>();
        h.width = j.at("width").get<int>();
        h.map = j.at("map").get<std::string>();
        h.rules = RulesFromJson(j.at("rules"));
        h.truncation_ticks = j.at("truncation_ticks").get<int>();
        if (!j.at("shaping").is_null()) h.shaping = ShapingFromJson(j.at("shaping"));
        h.players = j.at("players").get<std::array<std::string, kNumPlayers>>();
        h.seed = j.at("seed").get<std::uint64_t>();
        h.digests = j.at("digests").get<bool>();
        have_header = true;
      } else if (type == "step") {
        ReplayRecord r;
        r.tick = j.at("tick").get<int>();
        r.actions = j.at("actions").get<JointAction>();
        if (j.contains("digest")) r.digest = ParseHex(j.at("digest").get<std::string>());
        const int expected = log.records.empty() ? 1 : log.records.back().tick + 1;
        if (r.tick != expected) {
          throw CorruptReplay(where + "tick " + std::to_string(r.tick) +
                              ", expected " + std::to_string(expected));
        }
        log.records.push_back(r);
      } else if (type == "result") {
        ReplayResult res;
        res.ticks = j.at("ticks").get<int>();
        if (!j.at("winner").is_null()) res.winner = j.at("winner").get<int>();
        res.final_hash = ParseHex(j.at("final_hash").get<std::string>());
        log.result = res;
      } else {
        throw CorruptReplay(where + "unknown record type '" + type + "'");
      }
    } catch (const json::exception& e) {
      throw CorruptReplay(where + e.what());
    }
  }
  if (!have_header) throw CorruptReplay("empty replay");
  if (!log.result) throw CorruptReplay("missing result line (truncated file?)");
  return log;
}

void SaveReplay(const ReplayLog& log, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << SerializeReplay(log);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

ReplayLog LoadReplay(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorruptReplay("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseReplay(buf.str());
}

GridState InitialStateFromHeader(const ReplayHeader& header) {
  try {
    GridLayout layout = ParseMapText(header.map);
    if (layout.height != header.height || layout.width != header.width) {
      throw CorruptReplay("header dimensions disagree with the map");
    }
    return MakeInitialState(layout, header.rules);
  } catch (const MapParseError& e) {
    throw CorruptReplay(std::string("bad map in header: ") + e.what());
  } catch (const ConfigError& e) {
    throw CorruptReplay(std::string("bad rules in header: ") + e.what());
  }
}

namespace {

JointMove DecodeJoint(const JointAction& actions, int h, int w) {
  return {DecodeAction(actions[0], h, w).move, DecodeAction(actions[1], h, w).move};
}

}  // namespace

GridState ReplayStateAt(const ReplayLog& log, int ticks) {
  GridState state = InitialStateFromHeader(log.header);
  for (int t = 0; t < ticks && t < static_cast<int>(log.records.size()); ++t) {
    ApplyHalfTurn(state, DecodeJoint(log.records[t].actions, state.height(),
                                     state.width()));
  }
  return state;
}

VerifyOutcome VerifyReplay(const ReplayLog& log) {
  VerifyOutcome out;
  GridState state = InitialStateFromHeader(log.header);
  for (const ReplayRecord& r : log.records) {
    if (state.terminal()) {
      out.divergence_tick = r.tick;
      out.detail = "record after the game ended";
      return out;
    }
    ApplyHalfTurn(state, DecodeJoint(r.actions, state.height(), state.width()));
    if (r.digest && *r.digest != StateHash(state)) {
      out.divergence_tick = r.tick;
      out.detail = "digest mismatch";
      return out;
    }
  }
  out.final_hash = StateHash(state);
  if (log.result) {
    const ReplayResult& res = *log.result;
    if (res.final_hash != out.final_hash || res.ticks != state.tick() ||
        res.winner != state.winner()) {
      out.divergence_tick = state.tick();
      out.detail = "final state differs from the recorded result";
      return out;
    }
  }
  out.verified = true;
  return out;
}

}  // namespace generals
