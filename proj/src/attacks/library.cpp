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

#include "sqkd/attacks/library.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sqkd/engine/error.hpp"
#include "sqkd/engine/ops.hpp"
#include "sqkd/engine/random.hpp"

namespace sqkd::attacks {
namespace {

StateVector qubit_zero(std::uint32_t i) { return StateVector::basis(eve_probe(i), 2, 0); }

std::vector<StateVector> trivial_probe() { return {StateVector::basis(eve_probe(0), 1, 0)}; }

}  // namespace

AttackSpec identity_attack() { return AttackSpec("identity", {}, trivial_probe(), {}, {}); }

AttackSpec cnot_parity_attack(std::size_t first_round, std::size_t second_round) {
  if (first_round == second_round) {
    throw Error(Errc::DuplicateRound, "cnot_parity needs two distinct rounds, got " + std::to_string(first_round) +
                                          " twice");
  }
  AttackSpec::Schedule fwd;
  const AttackStep step{Unitary::cnot(), {transit(), eve_probe(0)}};
  fwd.per_round.emplace(first_round, step);
  fwd.per_round.emplace(second_round, step);
  return AttackSpec("cnot_parity",
                    {{"round_a", static_cast<double>(first_round)}, {"round_b", static_cast<double>(second_round)}},
                    {qubit_zero(0)}, std::move(fwd), {});
}

AttackSpec measure_resend_z_attack(std::size_t rounds) {
  std::vector<StateVector> blocks;
  AttackSpec::Schedule fwd;
  for (std::size_t i = 0; i < rounds; ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    blocks.push_back(qubit_zero(idx));
    fwd.per_round.emplace(i, AttackStep{Unitary::cnot(), {transit(), eve_probe(idx)}});
  }
  if (blocks.empty()) blocks = trivial_probe();
  return AttackSpec("measure_resend_z", {}, std::move(blocks), std::move(fwd), {});
}

AttackSpec swap_attack(std::size_t rounds) {
  std::vector<StateVector> blocks;
  AttackSpec::Schedule fwd;
  AttackSpec::Schedule bwd;
  for (std::size_t i = 0; i < rounds; ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    blocks.push_back(StateVector::plus(eve_probe(idx)));
    const AttackStep step{Unitary::swap(), {transit(), eve_probe(idx)}};
    fwd.per_round.emplace(i, step);
    bwd.per_round.emplace(i, step);
  }
  if (blocks.empty()) blocks = trivial_probe();
  return AttackSpec("swap", {}, std::move(blocks), std::move(fwd), std::move(bwd));
}

AttackSpec phase_probe_attack(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw Error(Errc::ParamOutOfRange, "phase_probe theta must lie in [0, pi], got " + std::to_string(theta));
  }
  AttackSpec::Schedule fwd;
  fwd.constant = AttackStep{Unitary::controlled(Unitary::rotation(theta)), {transit(), eve_probe(0)}};
  return AttackSpec("phase_probe", {{"theta", theta}}, {qubit_zero(0)}, std::move(fwd), {});
}

AttackSpec transit_phase_attack(double phi) {
  AttackSpec::Schedule fwd;
  fwd.constant = AttackStep{Unitary::phase(phi), {transit()}};
  return AttackSpec("transit_phase", {{"phi", phi}}, trivial_probe(), std::move(fwd), {});
}

AttackSpec random_decoupled_attack(std::size_t rounds, Rng& rng, std::size_t max_probe_dim) {
  const std::size_t probe_dim = 1 + rng.below(max_probe_dim);
  auto probe = random_state(SubsystemLayout::single(eve_probe(0), probe_dim), rng);

  AttackSpec::Schedule fwd;
  AttackSpec::Schedule bwd;
  const auto h = Unitary::hadamard();
  for (std::size_t i = 0; i < rounds; ++i) {
    // Backward: diagonal on the transit qubit, so Alice's resent |b> stays |b>.
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    d(1, 1) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    const Unitary diag(d);
    // Forward: any unitary with D U |+> ~ |+>, i.e. U = D^dag K with K diagonal
    // in the X basis.
    Matrix kx = Matrix::Zero(2, 2);
    kx(0, 0) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    kx(1, 1) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    const Unitary k = h * Unitary(kx) * h;
    const Unitary u = diag.adjoint() * k;

    fwd.per_round.emplace(i, AttackStep{Unitary::kron(u, random_unitary(probe_dim, rng)), {transit(), eve_probe(0)}});
    bwd.per_round.emplace(i, AttackStep{Unitary::kron(diag, random_unitary(probe_dim, rng)), {transit(), eve_probe(0)}});
  }
  return AttackSpec("decoupled", {{"probe_dim", static_cast<double>(probe_dim)}}, {std::move(probe)}, std::move(fwd),
                    std::move(bwd));
}

}  // namespace sqkd::attacks
