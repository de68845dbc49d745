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

#ifndef GENERALS_RUN_CONFIG_H_
#define GENERALS_RUN_CONFIG_H_

// File-based run configuration for the CLI. JSON; every key is optional
// unless noted, unknown keys are rejected at every level.
//
// {
//   "env": {
//     "map": {"generate": {<MapSpec fields>}} | {"text": "<map text>"}
//            | {"file": "<path, relative to the config file>"},
//     "rules": {"growth_interval_turns": 25, "castle_garrison_min": 40,
//               "castle_garrison_max": 50},
//     "truncation_ticks": 2000,
//     "reward": {"mode": "sparse"}
//             | {"mode": "shaped", "gamma": 0.99, "max_ratio": 10,
//                "w_land": 0.3, "w_army": 0.3, "w_castle": 0.4},
//     "include_memory_planes": false
//   },
//   "agents": ["expander", "random"],   (match/series/tournament need them)
//   "games": 100,
//   "seed": 0,
//   "out": "<directory for reports and replays>",
//   "write_replays": false,
//   "elo": {"anchor": "random", "rating": 1500, "smoothing": 1.0},
//   "workers": -1
// }

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "generals/env.h"
#include "generals/mapgen.h"

namespace generals {

struct EloOptions {
  std::string anchor;
  double rating = 1500.0;
  double smoothing = 1.0;
};

struct RunConfig {
  EnvConfig env;
  std::vector<std::string> agents;
  int games = 100;
  std::uint64_t seed = 0;
  std::string out_dir;
  bool write_replays = false;
  std::optional<EloOptions> elo;
  int workers = -1;
};

// Throws ConfigError naming the offending key. `base_dir` resolves relative
// map file paths.
RunConfig ParseRunConfig(std::string_view json_text,
                         const std::string& base_dir = ".");
RunConfig LoadRunConfig(const std::string& path);

// MapSpec fields as a flat JSON object, unknown keys rejected.
MapSpec ParseMapSpec(std::string_view json_text);

}  // namespace generals

#endif  // GENERALS_RUN_CONFIG_H_
