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

#include "generals/bench.h"

#include <chrono>
#include <memory>
#include <optional>
#include <utility>

#include "generals/arena.h"
#include "generals/rng.h"
#include "generals/vec_env.h"

namespace generals {

namespace {

// One environment with its two actors.
struct Slot {
  std::optional<Env> env;
  std::array<std::unique_ptr<Agent>, kNumPlayers> agents;
  std::array<Observation, kNumPlayers> obs;
  std::uint64_t seed = 0;
  std::uint64_t episode = 0;
  std::int64_t steps = 0;
  std::int64_t episodes = 0;
};

}  // namespace

BenchReport RunBench(const BenchOptions& options) {
  BenchReport report;
  report.height = options.height;
  report.width = options.width;
  report.batch = options.batch;
  report.duration_seconds = options.duration_seconds;
  report.per_env_steps.assign(options.batch, 0);
  if (options.duration_seconds <= 0.0 || options.batch <= 0) return report;

  EnvConfig config;
  MapSpec spec;
  spec.height = options.height;
  spec.width = options.width;
  config.map = GeneratedMap{spec};

  const AgentHandle random = RandomAgentHandle();
  std::vector<Slot> slots(options.batch);
  for (int i = 0; i < options.batch; ++i) {
    Slot& s = slots[i];
    s.seed = MixSeed(options.seed, static_cast<std::uint64_t>(i) << 32);
    s.env.emplace(config);
    s.obs = s.env->Reset(s.seed).observations;
    for (PlayerId p = 0; p < kNumPlayers; ++p) {
      s.agents[p] = random.make(MixSeed(s.seed, p + 1));
    }
  }

  WorkerPool pool(options.num_workers);
  const MemoryState no_memory;
  auto step_slot = [&](int i) {
    Slot& s = slots[i];
    JointAction actions;
    for (PlayerId p = 0; p < kNumPlayers; ++p) {
      actions[p] = s.agents[p]->Act(s.obs[p], no_memory);
    }
    StepResult r = s.env->Step(actions);
    ++s.steps;
    if (r.terminated || r.truncated) {
      ++s.episodes;
      s.obs = s.env->Reset(MixSeed(s.seed, ++s.episode)).observations;
    } else {
      s.obs = std::move(r.observations);
    }
  };

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto budget = std::chrono::duration<double>(options.duration_seconds);
  while (Clock::now() - start < budget) pool.ParallelFor(options.batch, step_slot);
  report.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  for (int i = 0; i < options.batch; ++i) {
    report.per_env_steps[i] = slots[i].steps;
    report.total_steps += slots[i].steps;
    report.episodes += slots[i].episodes;
  }
  return report;
}

}  // namespace generals
