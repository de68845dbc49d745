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

#ifndef GENERALS_BENCH_H_
#define GENERALS_BENCH_H_

#include <cstdint>
#include <vector>

namespace generals {

struct BenchReport {
  int height = 0;
  int width = 0;
  int batch = 0;
  double duration_seconds = 0.0;
  double elapsed_seconds = 0.0;
  std::int64_t total_steps = 0;  // half-turn env steps summed over the batch
  std::vector<std::int64_t> per_env_steps;
  std::int64_t episodes = 0;
  double steps_per_second() const {
    return elapsed_seconds > 0 ? total_steps / elapsed_seconds : 0.0;
  }
};

struct BenchOptions {
  int height = 24;
  int width = 24;
  int batch = 8;
  double duration_seconds = 10.0;
  std::uint64_t seed = 0;
  int num_workers = -1;
};

// Steps `batch` default-spec environments driven by random agents for the
// given wall-clock duration, resetting finished episodes in place. A zero
// duration returns an empty report without stepping.
BenchReport RunBench(const BenchOptions& options);

}  // namespace generals

#endif  // GENERALS_BENCH_H_
