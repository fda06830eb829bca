// Copyright 2026 The sqkd Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace sqkd {

// Seed-splitting rule for independent streams: splitmix64 finalizer over
// (master, index). Stream i of a run is Rng(split_seed(master, i)).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

// mt19937_64 with hand-rolled conversions, so a seed reproduces the same
// stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform integer in [0, n). n must be positive.
  std::size_t below(std::size_t n);
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace sqkd
