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

#ifndef GENERALS_MAPGEN_H_
#define GENERALS_MAPGEN_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "generals/core.h"

namespace generals {

// High-level terrain parameters. Defaults describe the 1v1 24x24 board.
struct MapSpec {
  int height = 24;
  int width = 24;
  double mountain_density = 0.20;
  // Accepted deviation of the realized mountain fraction from the density.
  double mountain_tolerance = 0.03;
  int castle_count_min = 9;
  int castle_count_max = 11;
  int garrison_min = 40;
  int garrison_max = 50;
  int min_general_bfs_distance = 15;
  int castle_within_radius = 6;
  int max_attempts = 10000;

  void Validate() const;
  bool operator==(const MapSpec&) const = default;
};

inline constexpr int kDefaultTextGarrison = 45;

struct GridLayout {
  int height = 0;
  int width = 0;
  std::vector<CellKind> cells;  // row-major
  std::array<Coord, kNumPlayers> generals{};
  std::map<Coord, int> castle_garrisons;

  bool InBounds(Coord c) const {
    return c.row >= 0 && c.row < height && c.col >= 0 && c.col < width;
  }
  CellKind at(Coord c) const { return cells[c.row * width + c.col]; }
  bool operator==(const GridLayout&) const = default;
};

class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ViolationCode {
  kBadDimensions,
  kBadGeneral,
  kMountainFraction,
  kCastleCount,
  kGarrisonRange,
  kGeneralsTooClose,
  kGeneralsUnreachable,
  kNoNearbyCastle,
};
std::string_view ToString(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

// Rejection sampling: i.i.d. mountains, uniform castle count, castles and
// generals placed uniformly on free cells, then every constraint is checked.
// Pure in (spec, seed). Throws GenerationExhausted after spec.max_attempts
// rejected samples.
GridLayout Generate(const MapSpec& spec, std::uint64_t seed);

// Empty result means the layout satisfies every constraint of `spec`.
std::vector<Violation> Validate(const GridLayout& layout, const MapSpec& spec);

double MountainFraction(const GridLayout& layout);

// 4-connected shortest path length with mountains impassable.
std::optional<int> BfsDistance(const GridLayout& layout, Coord a, Coord b);

// Distances from `from` to every cell; -1 marks unreachable cells.
std::vector<int> BfsDistances(const GridLayout& layout, Coord from);

// Text map grammar, one row per line:
//   '.' plain   '#' mountain   'A' player 0 general   'B' player 1 general
//   'C' castle (garrison 45 unless overridden)
// An optional "---" line may follow the rows, then lines "C <row> <col>
// <garrison>" that override individual castle garrisons.
class MapParseError : public std::runtime_error {
 public:
  enum class Code {
    kEmpty,
    kRaggedRows,
    kUnknownGlyph,
    kDuplicateGeneral,
    kMissingGeneral,
    kBadAnnotation,
    kAnnotationNotCastle,
  };
  MapParseError(Code code, int line, int column, const std::string& what);
  Code code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Code code_;
  int line_;
  int column_;
};

GridLayout ParseMapText(std::string_view text);

// Canonical form: newline-terminated rows, then the override section listing
// only garrisons that differ from the default, sorted by position.
std::string SerializeMapText(const GridLayout& layout);

// Fresh game on `layout`: generals owned with one unit each, castles neutral
// with their garrisons. Throws ConfigError when a garrison lies outside the
// rules' admissible range.
GridState MakeInitialState(const GridLayout& layout, const RulesConfig& rules);

}  // namespace generals

#endif  // GENERALS_MAPGEN_H_
