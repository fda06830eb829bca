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
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqkd/engine/state.hpp"

namespace sqkd::attacks {

// One interaction of Eve with the transit qubit. `targets` always contains
// transit(); the remaining targets are labels of Eve's probe register.
struct AttackStep {
  Unitary unitary;
  std::vector<Label> targets;
};

// Eve's strategy: one persistent probe register, prepared once, plus
// per-round forward (Bob -> Alice) and backward (Alice -> Bob) unitaries.
// Rounds without an entry act as the identity. A `constant` step applies on
// every round that has no explicit entry.
//
// The probe is stored as a product of blocks so that attacks with one fresh
// probe qubit per round stay tractable in sampling mode; a single block is the
// general entangled case.
class AttackSpec {
 public:
  struct Schedule {
    std::map<std::size_t, AttackStep> per_round;
    std::optional<AttackStep> constant;
  };

  // Throws Errc::AttackLayoutMismatch when a step targets labels outside the
  // probe register, omits the transit qubit, or its unitary has the wrong size.
  AttackSpec(std::string name, std::map<std::string, double> params, std::vector<StateVector> probe_blocks,
             Schedule forward, Schedule backward);

  const std::string& name() const { return name_; }
  const std::map<std::string, double>& params() const { return params_; }

  const std::vector<StateVector>& probe_blocks() const { return blocks_; }
  const SubsystemLayout& probe_layout() const { return probe_layout_; }
  std::vector<std::size_t> probe_dims() const { return probe_layout_.dims(); }
  // Tensor product of all blocks.
  StateVector probe_init() const;
  std::size_t block_of(Label probe_label) const;

  // nullptr means identity.
  const AttackStep* forward(std::size_t round) const;
  const AttackStep* backward(std::size_t round) const;

  static constexpr std::size_t kForever = std::numeric_limits<std::size_t>::max();
  // Last round whose steps touch any label of the block; kForever when a
  // constant step touches it, nullopt when nothing ever does.
  std::optional<std::size_t> last_use(std::size_t block) const;

 private:
  void validate(const Schedule& s) const;
  void validate(const AttackStep& step) const;

  std::string name_;
  std::map<std::string, double> params_;
  std::vector<StateVector> blocks_;
  SubsystemLayout probe_layout_;
  std::map<Label, std::size_t> block_index_;
  Schedule forward_;
  Schedule backward_;
  std::vector<std::optional<std::size_t>> last_use_;
};

}  // namespace sqkd::attacks
