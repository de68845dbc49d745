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

#ifndef GENERALS_REPORT_H_
#define GENERALS_REPORT_H_

// Canonical report files (format_version 1, sorted-key compact JSON plus a
// trailing newline) and their plain-text renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "generals/arena.h"
#include "generals/bench.h"
#include "generals/core.h"

namespace generals {

inline constexpr int kReportFormatVersion = 1;

std::string MatchReportJson(const MatchResult& m, std::uint64_t seed);
std::string MatchReportText(const MatchResult& m, std::uint64_t seed);

std::string TournamentReportJson(const TournamentResult& t, std::uint64_t seed);
std::string TournamentReportText(const TournamentResult& t, std::uint64_t seed);

std::string BenchReportJson(const BenchReport& r);
std::string BenchReportText(const BenchReport& r);

// Text board. With a perspective, cells hidden from that player print as
// fog. Each cell is six characters: owner glyph ('A', 'B' or '.'), kind
// glyph ('G' general, 'C' castle, ' ' plain) and a four-wide army count;
// mountains print as "######" and fog as "~~~~~~".
std::string RenderBoard(const GridState& state,
                        std::optional<PlayerId> perspective);

}  // namespace generals

#endif  // GENERALS_REPORT_H_
