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

#include "generals/vec_env.h"

#include <algorithm>
#include <stdexcept>

namespace generals {

WorkerPool::WorkerPool(int num_workers) {
  if (num_workers < 0) {
    num_workers =
        std::max(0, static_cast<int>(std::thread::hardware_concurrency()) - 1);
  }
  threads_.reserve(num_workers);
  for (int i = 0; i < num_workers; ++i) {
    threads_.emplace_back([this] { WorkerLoop(); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  wake_.notify_all();
  for (auto& t : threads_) t.join();
}

void WorkerPool::Drain() {
  for (int i = next_.fetch_add(1); i < job_size_; i = next_.fetch_add(1)) {
    (*job_)(i);
  }
}

void WorkerPool::WorkerLoop() {
  std::uint64_t seen = 0;
  while (true) {
    {
      std::unique_lock<std::mutex> lock(mu_);
      wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
    }
    Drain();
    {
      std::lock_guard<std::mutex> lock(mu_);
      --active_;
    }
    finished_.notify_one();
  }
}

void WorkerPool::ParallelFor(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  if (threads_.empty() || n == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    job_ = &fn;
    job_size_ = n;
    next_.store(0);
    active_ = num_workers();
    ++generation_;
  }
  wake_.notify_all();
  Drain();
  std::unique_lock<std::mutex> lock(mu_);
  // Every worker checks in once per generation, even if it finds no work.
  finished_.wait(lock, [&] { return active_ == 0; });
  job_ = nullptr;
}

VecEnv::VecEnv(std::vector<EnvConfig> configs, int num_workers)
    : pool_(num_workers) {
  envs_.reserve(configs.size());
  for (auto& c : configs) envs_.emplace_back(std::move(c));
}

VecEnv::VecEnv(const EnvConfig& config, int num_envs, int num_workers)
    : VecEnv(std::vector<EnvConfig>(num_envs, config), num_workers) {}

std::vector<ResetResult> VecEnv::Reset(const std::vector<std::uint64_t>& seeds) {
  if (seeds.size() != envs_.size()) {
    throw std::invalid_argument("one seed per environment required");
  }
  std::vector<ResetResult> out(envs_.size());
  std::vector<std::exception_ptr> errors(envs_.size());
  pool_.ParallelFor(size(), [&](int i) {
    try {
      out[i] = envs_[i].Reset(seeds[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<BatchOutcome> VecEnv::Step(const std::vector<JointAction>& actions) {
  if (actions.size() != envs_.size()) {
    throw std::invalid_argument("one joint action per environment required");
  }
  std::vector<BatchOutcome> out(envs_.size());
  pool_.ParallelFor(size(), [&](int i) {
    try {
      out[i].result = envs_[i].Step(actions[i]);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    } catch (...) {
      out[i].error = "unknown error";
    }
  });
  return out;
}

}  // namespace generals
