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

#ifndef GENERALS_RNG_H_
#define GENERALS_RNG_H_

#include <cstdint>
#include <random>

namespace generals {

// SplitMix64 finalizer. Used to derive independent child seeds from a master
// seed so that per-game and per-agent streams never overlap.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream);

// Random source whose output is identical on every platform: std::mt19937_64
// with hand-written distributions (the <random> ones vary by library).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [lo, hi], inclusive. Unbiased (rejection sampling).
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble();

  bool Bernoulli(double p) { return UniformDouble() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace generals

#endif  // GENERALS_RNG_H_
