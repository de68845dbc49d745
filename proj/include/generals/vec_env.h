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

#ifndef GENERALS_VEC_ENV_H_
#define GENERALS_VEC_ENV_H_

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "generals/env.h"

namespace generals {

// Persistent workers for fork-join loops. The calling thread participates,
// so a pool of zero workers runs everything inline.
class WorkerPool {
 public:
  // num_workers < 0 picks hardware_concurrency() - 1.
  explicit WorkerPool(int num_workers = -1);
  ~WorkerPool();
  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  int num_workers() const { return static_cast<int>(threads_.size()); }

  // Calls fn(i) for every i in [0, n) and returns when all calls finished.
  // fn must not throw.
  void ParallelFor(int n, const std::function<void(int)>& fn);

 private:
  void WorkerLoop();
  void Drain();

  std::vector<std::thread> threads_;
  std::mutex mu_;
  std::condition_variable wake_;
  std::condition_variable finished_;
  const std::function<void(int)>* job_ = nullptr;
  int job_size_ = 0;
  std::atomic<int> next_{0};
  int active_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
};

struct BatchOutcome {
  std::optional<StepResult> result;
  std::string error;  // set when the env threw; other envs are unaffected
  bool ok() const { return result.has_value(); }
};

// A batch of independent environments stepped across a worker pool. Results
// are identical to stepping each env sequentially.
class VecEnv {
 public:
  VecEnv(std::vector<EnvConfig> configs, int num_workers = -1);
  VecEnv(const EnvConfig& config, int num_envs, int num_workers = -1);

  int size() const { return static_cast<int>(envs_.size()); }
  Env& env(int i) { return envs_[i]; }
  const Env& env(int i) const { return envs_[i]; }

  std::vector<ResetResult> Reset(const std::vector<std::uint64_t>& seeds);
  std::vector<BatchOutcome> Step(const std::vector<JointAction>& actions);

 private:
  std::vector<Env> envs_;
  WorkerPool pool_;
};

}  // namespace generals

#endif  // GENERALS_VEC_ENV_H_
