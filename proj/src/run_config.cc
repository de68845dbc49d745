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

#include "generals/run_config.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace generals {

using nlohmann::json;

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void RejectUnknown(const json& obj, const std::string& where,
                   std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <typename T>
void Read(const json& obj, const char* key, const std::string& where, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + ": wrong type");
  }
}

MapSpec MapSpecFromJson(const json& j, const std::string& where) {
  RejectUnknown(j, where,
                {"height", "width", "mountain_density", "mountain_tolerance",
                 "castle_count_min", "castle_count_max", "garrison_min",
                 "garrison_max", "min_general_bfs_distance",
                 "castle_within_radius", "max_attempts"});
  MapSpec s;
  Read(j, "height", where, s.height);
  Read(j, "width", where, s.width);
  Read(j, "mountain_density", where, s.mountain_density);
  Read(j, "mountain_tolerance", where, s.mountain_tolerance);
  Read(j, "castle_count_min", where, s.castle_count_min);
  Read(j, "castle_count_max", where, s.castle_count_max);
  Read(j, "garrison_min", where, s.garrison_min);
  Read(j, "garrison_max", where, s.garrison_max);
  Read(j, "min_general_bfs_distance", where, s.min_general_bfs_distance);
  Read(j, "castle_within_radius", where, s.castle_within_radius);
  Read(j, "max_attempts", where, s.max_attempts);
  s.Validate();
  return s;
}

EnvConfig EnvFromJson(const json& j, const std::string& base_dir) {
  const std::string where = "env";
  RejectUnknown(j, where,
                {"map", "rules", "truncation_ticks", "reward",
                 "include_memory_planes"});
  EnvConfig env;
  if (j.contains("map")) {
    const json& m = j.at("map");
    RejectUnknown(m, "env.map", {"generate", "text", "file"});
    if (m.size() != 1) {
      throw ConfigError("env.map: exactly one of generate, text, file");
    }
    if (m.contains("generate")) {
      env.map = GeneratedMap{MapSpecFromJson(m.at("generate"), "env.map.generate")};
    } else if (m.contains("text")) {
      std::string text;
      Read(m, "text", "env.map", text);
      env.map = MapText{text};
    } else {
      std::string file;
      Read(m, "file", "env.map", file);
      std::filesystem::path p(file);
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      env.map = MapText{ReadFile(p.string())};
    }
  }
  if (j.contains("rules")) {
    const json& r = j.at("rules");
    RejectUnknown(r, "env.rules",
                  {"growth_interval_turns", "castle_garrison_min",
                   "castle_garrison_max"});
    Read(r, "growth_interval_turns", "env.rules", env.rules.growth_interval_turns);
    Read(r, "castle_garrison_min", "env.rules", env.rules.castle_garrison_min);
    Read(r, "castle_garrison_max", "env.rules", env.rules.castle_garrison_max);
  }
  Read(j, "truncation_ticks", where, env.truncation_ticks);
  Read(j, "include_memory_planes", where, env.include_memory_planes);
  if (j.contains("reward")) {
    const json& r = j.at("reward");
    RejectUnknown(r, "env.reward",
                  {"mode", "gamma", "max_ratio", "w_land", "w_army", "w_castle"});
    std::string mode = "sparse";
    Read(r, "mode", "env.reward", mode);
    if (mode == "shaped") {
      ShapingConfig s;
      Read(r, "gamma", "env.reward", s.gamma);
      Read(r, "max_ratio", "env.reward", s.max_ratio);
      Read(r, "w_land", "env.reward", s.w_land);
      Read(r, "w_army", "env.reward", s.w_army);
      Read(r, "w_castle", "env.reward", s.w_castle);
      env.shaping = s;
    } else if (mode == "sparse") {
      if (r.size() != 1) {
        throw ConfigError("env.reward: shaping keys require mode 'shaped'");
      }
    } else {
      throw ConfigError("env.reward.mode: expected 'sparse' or 'shaped'");
    }
  }
  env.Validate();
  return env;
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

MapSpec ParseMapSpec(std::string_view json_text) {
  return MapSpecFromJson(ParseJson(json_text), "spec");
}

RunConfig ParseRunConfig(std::string_view json_text, const std::string& base_dir) {
  const json j = ParseJson(json_text);
  RejectUnknown(j, "config",
                {"env", "agents", "games", "seed", "out", "write_replays",
                 "elo", "workers"});
  RunConfig rc;
  if (j.contains("env")) rc.env = EnvFromJson(j.at("env"), base_dir);
  Read(j, "agents", "config", rc.agents);
  std::set<std::string> unique(rc.agents.begin(), rc.agents.end());
  if (unique.size() != rc.agents.size()) {
    throw ConfigError("config.agents: duplicate agent");
  }
  Read(j, "games", "config", rc.games);
  if (rc.games < 1) throw ConfigError("config.games: must be >= 1");
  Read(j, "seed", "config", rc.seed);
  Read(j, "out", "config", rc.out_dir);
  Read(j, "write_replays", "config", rc.write_replays);
  Read(j, "workers", "config", rc.workers);
  if (j.contains("elo")) {
    const json& e = j.at("elo");
    RejectUnknown(e, "config.elo", {"anchor", "rating", "smoothing"});
    if (!e.contains("anchor")) throw ConfigError("config.elo: 'anchor' is required");
    EloOptions elo;
    Read(e, "anchor", "config.elo", elo.anchor);
    Read(e, "rating", "config.elo", elo.rating);
    Read(e, "smoothing", "config.elo", elo.smoothing);
    if (!unique.count(elo.anchor)) {
      throw ConfigError("config.elo.anchor: not one of the agents");
    }
    if (elo.smoothing < 0) throw ConfigError("config.elo.smoothing: negative");
    rc.elo = elo;
  }
  return rc;
}

RunConfig LoadRunConfig(const std::string& path) {
  const std::string dir =
      std::filesystem::path(path).parent_path().string();
  return ParseRunConfig(ReadFile(path), dir.empty() ? "." : dir);
}

}  // namespace generals
