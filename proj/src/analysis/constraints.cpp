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

#include <cmath>
#include <string>

#include "sqkd/analysis/analysis.hpp"
#include "sqkd/engine/error.hpp"
#include "sqkd/engine/ops.hpp"
#include "sqkd/protocol/exact.hpp"

namespace sqkd::analysis {
namespace {

void require_targets(const attacks::AttackSpec& attack, std::size_t round, const SubsystemLayout& env) {
  for (const auto* step : {attack.forward(round), attack.backward(round)}) {
    if (!step) continue;
    for (const auto& l : step->targets) {
      if (l != transit() && !env.contains(l)) {
        throw Error(Errc::AttackLayoutMismatch, "environment lacks probe subsystem " + l.str());
      }
    }
  }
  if (env.contains(transit())) throw Error(Errc::AttackLayoutMismatch, "environment already holds a transit qubit");
}

double distance(const SubnormalizedVector& a, const SubnormalizedVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.amps().size(); ++i) s += std::norm(a.amps()[i] - b.amps()[i]);
  return std::sqrt(s);
}

}  // namespace

Branches extract_branches(const attacks::AttackSpec& attack, std::size_t round, const StateVector& env) {
  require_targets(attack, round, env.layout());
  const StateVector fwd = protocol::after_forward(env, attack, round);
  return {slice(fwd, transit(), 0), slice(fwd, transit(), 1)};
}

ConstraintReport constraint_at(const attacks::AttackSpec& attack, std::size_t round, const StateVector& env) {
  require_targets(attack, round, env.layout());
  const StateVector fwd = protocol::after_forward(env, attack, round);
  const auto* bwd = attack.backward(round);

  ConstraintReport rep;
  rep.round = round;
  // SIFT: Alice's probe separates the branches, so each one goes through V alone.
  SubnormalizedVector kept[2] = {project(fwd, transit(), 0), project(fwd, transit(), 1)};
  for (std::size_t b = 0; b < 2; ++b) {
    if (bwd) kept[b] = apply_unitary(kept[b], bwd->unitary, bwd->targets);
    rep.test_residual += project(kept[b], transit(), 1 - b).weight();
  }
  rep.f_distance = distance(slice(kept[0], transit(), 0), slice(kept[1], transit(), 1));

  // CTRL: V acts on the coherent sum of both branches.
  const StateVector reflected = bwd ? apply_unitary(fwd, bwd->unitary, bwd->targets) : fwd;
  rep.ctrl_error_prob = outcome_probability(reflected, transit(), Outcome::Minus);
  return rep;
}

ConstraintReport constraint_check(const attacks::AttackSpec& attack, std::size_t round, std::string_view history) {
  std::vector<protocol::Choice> prefix(round, protocol::Choice::Ctrl);
  if (!history.empty()) {
    if (history.size() != round) {
      throw Error(Errc::InvalidConfig, "history must cover exactly the " + std::to_string(round) + " earlier rounds");
    }
    prefix = protocol::parse_pattern(history);
  }
  protocol::check_exact_budget(attack, round, std::max<std::size_t>(round, protocol::kDefaultExactRoundCap));
  return constraint_at(attack, round, protocol::evolve_exact(attack, prefix));
}

}  // namespace sqkd::analysis
