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

#include "generals/mapgen.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <sstream>

#include "generals/rng.h"

namespace generals {

void MapSpec::Validate() const {
  if (height < 1 || width < 1) throw ConfigError("map must be at least 1x1");
  if (!(mountain_density >= 0.0 && mountain_density < 1.0)) {
    throw ConfigError("mountain_density must lie in [0, 1)");
  }
  if (mountain_tolerance < 0.0) throw ConfigError("negative mountain_tolerance");
  if (castle_count_min < 0 || castle_count_min > castle_count_max) {
    throw ConfigError("castle count range is empty");
  }
  if (garrison_min < 0 || garrison_min > garrison_max) {
    throw ConfigError("garrison range is empty");
  }
  if (min_general_bfs_distance < 1) {
    throw ConfigError("min_general_bfs_distance must be >= 1");
  }
  if (castle_within_radius < 0) throw ConfigError("negative castle radius");
  if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
}

std::string_view ToString(ViolationCode code) {
  switch (code) {
    case ViolationCode::kBadDimensions:
      return "BadDimensions";
    case ViolationCode::kBadGeneral:
      return "BadGeneral";
    case ViolationCode::kMountainFraction:
      return "MountainFraction";
    case ViolationCode::kCastleCount:
      return "CastleCount";
    case ViolationCode::kGarrisonRange:
      return "GarrisonRange";
    case ViolationCode::kGeneralsTooClose:
      return "GeneralsTooClose";
    case ViolationCode::kGeneralsUnreachable:
      return "GeneralsUnreachable";
    case ViolationCode::kNoNearbyCastle:
      return "NoNearbyCastle";
  }
  return "Unknown";
}

std::vector<int> BfsDistances(const GridLayout& layout, Coord from) {
  std::vector<int> dist(layout.cells.size(), -1);
  if (!layout.InBounds(from) || layout.at(from) == CellKind::kMountain) {
    return dist;
  }
  std::vector<int> frontier;
  frontier.reserve(layout.cells.size());
  const int start = from.row * layout.width + from.col;
  dist[start] = 0;
  frontier.push_back(start);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const int idx = frontier[head];
    const Coord c{idx / layout.width, idx % layout.width};
    for (int d = 0; d < kNumDirections; ++d) {
      const Coord n = Neighbor(c, static_cast<Direction>(d));
      if (!layout.InBounds(n)) continue;
      const int nidx = n.row * layout.width + n.col;
      if (dist[nidx] >= 0 || layout.cells[nidx] == CellKind::kMountain) continue;
      dist[nidx] = dist[idx] + 1;
      frontier.push_back(nidx);
    }
  }
  return dist;
}

std::optional<int> BfsDistance(const GridLayout& layout, Coord a, Coord b) {
  if (!layout.InBounds(b)) return std::nullopt;
  const int d = BfsDistances(layout, a)[b.row * layout.width + b.col];
  if (d < 0) return std::nullopt;
  return d;
}

double MountainFraction(const GridLayout& layout) {
  if (layout.cells.empty()) return 0.0;
  const auto mountains =
      std::count(layout.cells.begin(), layout.cells.end(), CellKind::kMountain);
  return static_cast<double>(mountains) / static_cast<double>(layout.cells.size());
}

std::vector<Violation> Validate(const GridLayout& layout, const MapSpec& spec) {
  std::vector<Violation> out;
  auto add = [&out](ViolationCode code, std::string detail) {
    out.push_back({code, std::move(detail)});
  };

  if (layout.height != spec.height || layout.width != spec.width ||
      layout.cells.size() !=
          static_cast<std::size_t>(layout.height) * layout.width) {
    add(ViolationCode::kBadDimensions,
        "layout is " + std::to_string(layout.height) + "x" +
            std::to_string(layout.width) + ", spec wants " +
            std::to_string(spec.height) + "x" + std::to_string(spec.width));
    return out;
  }
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    const Coord g = layout.generals[p];
    if (!layout.InBounds(g) || layout.at(g) != CellKind::kGeneral) {
      add(ViolationCode::kBadGeneral,
          "player " + std::to_string(p) + " general is not on a general cell");
      return out;
    }
  }
  const auto generals_on_grid =
      std::count(layout.cells.begin(), layout.cells.end(), CellKind::kGeneral);
  if (generals_on_grid != kNumPlayers) {
    add(ViolationCode::kBadGeneral,
        "expected 2 general cells, found " + std::to_string(generals_on_grid));
  }

  const double fraction = MountainFraction(layout);
  if (std::abs(fraction - spec.mountain_density) >
      spec.mountain_tolerance + 1e-12) {
    std::ostringstream s;
    s << "mountain fraction " << fraction << " outside "
      << spec.mountain_density << " +/- " << spec.mountain_tolerance;
    add(ViolationCode::kMountainFraction, s.str());
  }

  std::vector<Coord> castles;
  for (int i = 0; i < static_cast<int>(layout.cells.size()); ++i) {
    if (layout.cells[i] == CellKind::kCastle) {
      castles.push_back({i / layout.width, i % layout.width});
    }
  }
  const int n_castles = static_cast<int>(castles.size());
  if (n_castles < spec.castle_count_min || n_castles > spec.castle_count_max) {
    add(ViolationCode::kCastleCount,
        std::to_string(n_castles) + " castles, expected [" +
            std::to_string(spec.castle_count_min) + ", " +
            std::to_string(spec.castle_count_max) + "]");
  }
  for (const Coord& c : castles) {
    const auto it = layout.castle_garrisons.find(c);
    const int g = it == layout.castle_garrisons.end() ? -1 : it->second;
    if (g < spec.garrison_min || g > spec.garrison_max) {
      add(ViolationCode::kGarrisonRange,
          "castle (" + std::to_string(c.row) + "," + std::to_string(c.col) +
              ") garrison " + std::to_string(g));
    }
  }

  const std::vector<int> from_a = BfsDistances(layout, layout.generals[0]);
  const std::vector<int> from_b = BfsDistances(layout, layout.generals[1]);
  const Coord gb = layout.generals[1];
  const int between = from_a[gb.row * layout.width + gb.col];
  if (between < 0) {
    add(ViolationCode::kGeneralsUnreachable, "no path between generals");
  } else if (between < spec.min_general_bfs_distance) {
    add(ViolationCode::kGeneralsTooClose,
        "generals " + std::to_string(between) + " steps apart, need " +
            std::to_string(spec.min_general_bfs_distance));
  }

  const std::array<const std::vector<int>*, kNumPlayers> dists{&from_a, &from_b};
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    const bool near = std::any_of(castles.begin(), castles.end(), [&](Coord c) {
      const int d = (*dists[p])[c.row * layout.width + c.col];
      return d >= 0 && d <= spec.castle_within_radius;
    });
    if (!near) {
      add(ViolationCode::kNoNearbyCastle,
          "player " + std::to_string(p) + " has no castle within " +
              std::to_string(spec.castle_within_radius) + " steps");
    }
  }
  return out;
}

GridLayout Generate(const MapSpec& spec, std::uint64_t seed) {
  spec.Validate();
  Rng rng(seed);
  const int n = spec.height * spec.width;
  std::vector<int> free_cells;
  free_cells.reserve(n);
  std::map<ViolationCode, int> rejections;

  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    GridLayout layout;
    layout.height = spec.height;
    layout.width = spec.width;
    layout.cells.assign(n, CellKind::kPlain);

    free_cells.clear();
    for (int i = 0; i < n; ++i) {
      if (rng.Bernoulli(spec.mountain_density)) {
        layout.cells[i] = CellKind::kMountain;
      } else {
        free_cells.push_back(i);
      }
    }
    const int n_castles = static_cast<int>(
        rng.UniformInt(spec.castle_count_min, spec.castle_count_max));
    const int needed = n_castles + kNumPlayers;
    if (static_cast<int>(free_cells.size()) < needed) {
      ++rejections[ViolationCode::kCastleCount];
      continue;
    }

    // Partial Fisher-Yates: the first `needed` slots become a uniform sample.
    for (int k = 0; k < needed; ++k) {
      const auto pick = rng.UniformInt(k, static_cast<std::int64_t>(free_cells.size()) - 1);
      std::swap(free_cells[k], free_cells[pick]);
    }
    for (PlayerId p = 0; p < kNumPlayers; ++p) {
      const int idx = free_cells[p];
      layout.cells[idx] = CellKind::kGeneral;
      layout.generals[p] = {idx / spec.width, idx % spec.width};
    }
    for (int k = kNumPlayers; k < needed; ++k) {
      const int idx = free_cells[k];
      layout.cells[idx] = CellKind::kCastle;
      layout.castle_garrisons[{idx / spec.width, idx % spec.width}] =
          static_cast<int>(rng.UniformInt(spec.garrison_min, spec.garrison_max));
    }
    const auto violations = Validate(layout, spec);
    if (violations.empty()) return layout;
    for (const Violation& v : violations) ++rejections[v.code];
  }
  std::string detail;
  for (const auto& [code, count] : rejections) {
    detail += "\n  " + std::string(ToString(code)) + ": " +
              std::to_string(count) + " rejected samples";
  }
  throw GenerationExhausted("no valid layout after " +
                            std::to_string(spec.max_attempts) +
                            " attempts; violated constraints:" + detail);
}

MapParseError::MapParseError(Code code, int line, int column,
                             const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      code_(code),
      line_(line),
      column_(column) {}

namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool ParseInt(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

GridLayout ParseMapText(std::string_view text) {
  using Code = MapParseError::Code;
  const std::vector<std::string_view> lines = SplitLines(text);
  std::size_t n_rows = 0;
  while (n_rows < lines.size() && lines[n_rows] != "---") ++n_rows;
  if (n_rows == 0 || lines[0].empty()) {
    throw MapParseError(Code::kEmpty, 1, 1, "map has no rows");
  }

  GridLayout layout;
  layout.height = static_cast<int>(n_rows);
  layout.width = static_cast<int>(lines[0].size());
  layout.cells.reserve(n_rows * lines[0].size());
  std::array<bool, kNumPlayers> seen{false, false};
  for (std::size_t r = 0; r < n_rows; ++r) {
    const int line_no = static_cast<int>(r) + 1;
    if (static_cast<int>(lines[r].size()) != layout.width) {
      throw MapParseError(Code::kRaggedRows, line_no, 1,
                          "row width " + std::to_string(lines[r].size()) +
                              " differs from " + std::to_string(layout.width));
    }
    for (int c = 0; c < layout.width; ++c) {
      const char g = lines[r][c];
      const Coord pos{static_cast<int>(r), c};
      switch (g) {
        case '.':
          layout.cells.push_back(CellKind::kPlain);
          break;
        case '#':
          layout.cells.push_back(CellKind::kMountain);
          break;
        case 'C':
          layout.cells.push_back(CellKind::kCastle);
          layout.castle_garrisons[pos] = kDefaultTextGarrison;
          break;
        case 'A':
        case 'B': {
          const PlayerId p = g - 'A';
          if (seen[p]) {
            throw MapParseError(Code::kDuplicateGeneral, line_no, c + 1,
                                std::string("second general '") + g + "'");
          }
          seen[p] = true;
          layout.generals[p] = pos;
          layout.cells.push_back(CellKind::kGeneral);
          break;
        }
        default:
          throw MapParseError(Code::kUnknownGlyph, line_no, c + 1,
                              std::string("unknown glyph '") + g + "'");
      }
    }
  }
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    if (!seen[p]) {
      throw MapParseError(Code::kMissingGeneral, 1, 1,
                          std::string("no general '") +
                              static_cast<char>('A' + p) + "'");
    }
  }

  for (std::size_t r = n_rows + 1; r < lines.size(); ++r) {
    const int line_no = static_cast<int>(r) + 1;
    std::vector<std::string_view> tokens;
    std::string_view rest = lines[r];
    while (!rest.empty()) {
      const auto start = rest.find_first_not_of(' ');
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto end = std::min(rest.find(' '), rest.size());
      tokens.push_back(rest.substr(0, end));
      rest.remove_prefix(end);
    }
    int row = 0, col = 0, garrison = 0;
    if (tokens.size() != 4 || tokens[0] != "C" || !ParseInt(tokens[1], row) ||
        !ParseInt(tokens[2], col) || !ParseInt(tokens[3], garrison) ||
        garrison < 0) {
      throw MapParseError(Code::kBadAnnotation, line_no, 1,
                          "expected 'C <row> <col> <garrison>'");
    }
    const Coord pos{row, col};
    if (!layout.InBounds(pos) || layout.at(pos) != CellKind::kCastle) {
      throw MapParseError(Code::kAnnotationNotCastle, line_no, 1,
                          "annotation does not point at a castle");
    }
    layout.castle_garrisons[pos] = garrison;
  }
  return layout;
}

std::string SerializeMapText(const GridLayout& layout) {
  std::string out;
  out.reserve(static_cast<std::size_t>(layout.height) * (layout.width + 1));
  for (int r = 0; r < layout.height; ++r) {
    for (int c = 0; c < layout.width; ++c) {
      const Coord pos{r, c};
      switch (layout.at(pos)) {
        case CellKind::kPlain:
          out += '.';
          break;
        case CellKind::kMountain:
          out += '#';
          break;
        case CellKind::kCastle:
          out += 'C';
          break;
        case CellKind::kGeneral:
          out += pos == layout.generals[1] ? 'B' : 'A';
          break;
      }
    }
    out += '\n';
  }
  bool header = false;
  for (const auto& [pos, garrison] : layout.castle_garrisons) {
    if (garrison == kDefaultTextGarrison) continue;
    if (!header) {
      out += "---\n";
      header = true;
    }
    out += "C " + std::to_string(pos.row) + " " + std::to_string(pos.col) +
           " " + std::to_string(garrison) + "\n";
  }
  return out;
}

GridState MakeInitialState(const GridLayout& layout, const RulesConfig& rules) {
  rules.Validate();
  std::vector<Cell> cells(layout.cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i].kind = layout.cells[i];
    const Coord pos{static_cast<int>(i) / layout.width,
                    static_cast<int>(i) % layout.width};
    if (layout.cells[i] == CellKind::kCastle) {
      const auto it = layout.castle_garrisons.find(pos);
      const int g = it == layout.castle_garrisons.end() ? kDefaultTextGarrison
                                                        : it->second;
      if (g < rules.castle_garrison_min || g > rules.castle_garrison_max) {
        throw ConfigError("castle garrison " + std::to_string(g) +
                          " outside the admissible range");
      }
      cells[i].army = g;
    }
  }
  for (PlayerId p = 0; p < kNumPlayers; ++p) {
    if (!layout.InBounds(layout.generals[p])) {
      throw ConfigError("general position out of bounds");
    }
    Cell& g = cells[layout.generals[p].row * layout.width +
                    layout.generals[p].col];
    g.owner = p;
    g.army = 1;
  }
  return GridState(layout.height, layout.width, std::move(cells),
                   layout.generals, rules);
}

}  // namespace generals
