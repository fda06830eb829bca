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

#include "sqkd/attacks/attack_spec.hpp"
#include "sqkd/protocol/protocol.hpp"

namespace sqkd::protocol {

// Exact-mode Born statistics against sampling-mode frequencies. Each trial t
// uses seed split_seed(config.seed, t); both modes draw Alice's choices from
// the same stream, so a trial sees the same CTRL/SIFT pattern in both. Every
// SIFT round counts as tested here.
struct EquivalenceReport {
  std::size_t trials = 0;
  std::size_t rounds = 0;
  double exact_ctrl_rate = 0.0;
  double sampled_ctrl_rate = 0.0;
  double exact_test_rate = 0.0;
  double sampled_test_rate = 0.0;
  // (sampled - expected error count) / exact standard deviation of the count.
  double ctrl_z = 0.0;
  double test_z = 0.0;
  // Largest |z| over (pattern, joint reading) cells; informational.
  double max_cell_z = 0.0;
  // Sampled joint readings that exact mode gives probability zero.
  std::size_t impossible_outcomes = 0;
  // |ctrl_z| <= 4, |test_z| <= 4 and no impossible readings.
  bool equivalent = false;
};

inline constexpr double kEquivalenceSigmas = 4.0;

// Throws Errc::ExactCapExceeded when config.rounds is beyond the exact cap.
EquivalenceReport sift_equivalence_check(const ProtocolConfig& config, const attacks::AttackSpec& attack,
                                         std::size_t trials);

}  // namespace sqkd::protocol
