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


#include "doctest.h"
#include "generals/report.h"
#include "json.hpp"
#include "test_util.h"

namespace generals {
namespace {

TEST_CASE("Board rendering") {
  const GridState s = testing::FixtureState(
      "A#.\n"
      "..C\n"
      "..B\n",
      {{{1, 0}, 0, 12}});
  const std::string full = RenderBoard(s, std::nullopt);
  CHECK(full ==
        "tick 0  A: land 2 army 13 | B: land 1 army 1\n"
        "AG   1 ###### .    0\n"
        "A   12 .    0 .C  45\n"
        ".    0 .    0 BG   1\n");
  const std::string fogged = RenderBoard(s, 0);
  CHECK(fogged ==
        "tick 0  A: land 2 army 13 | B: land 1 army 1\n"
        "AG   1 ###### ~~~~~~\n"
        "A   12 .    0 ~~~~~~\n"
        ".    0 .    0 ~~~~~~\n");
}

TEST_CASE("Reports are canonical JSON") {
  BenchReport r;
  r.height = 4;
  r.width = 4;
  r.batch = 2;
  r.per_env_steps = {3, 4};
  r.total_steps = 7;
  r.elapsed_seconds = 1.0;
  const std::string text = BenchReportJson(r);
  CHECK(text.back() == '\n');
  const auto j = nlohmann::json::parse(text);
  CHECK(j.dump() + "\n" == text);
  CHECK(j["type"] == "bench");
  CHECK(j["format_version"] == kReportFormatVersion);
  CHECK(j["steps_per_second"] == 7.0);
}

}  // namespace
}  // namespace generals
