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

#include "sqkd/protocol/exact.hpp"

#include <string>

#include "sqkd/engine/error.hpp"
#include "sqkd/engine/kernels.hpp"
#include "sqkd/engine/ops.hpp"

namespace sqkd::protocol {

void check_exact_budget(const attacks::AttackSpec& attack, std::size_t rounds, std::size_t cap) {
  if (rounds > cap) {
    throw Error(Errc::ExactCapExceeded,
                std::to_string(rounds) + " rounds exceeds the exact round cap of " + std::to_string(cap));
  }
  // Peak: probe x (B, A)^rounds x transit.
  std::size_t dim = attack.probe_layout().total_dim() * 2;
  for (std::size_t i = 0; i < rounds; ++i) {
    dim *= 4;
    if (dim > kMaxExactDimension) {
      throw Error(Errc::ExactCapExceeded, "joint state of " + std::to_string(rounds) + " rounds with a probe of dimension " +
                                              std::to_string(attack.probe_layout().total_dim()) + " is too large");
    }
  }
}

StateVector exact_initial_state(const attacks::AttackSpec& attack) { return attack.probe_init(); }

StateVector after_forward(const StateVector& env, const attacks::AttackSpec& attack, std::size_t round) {
  StateVector psi = tensor(env, StateVector::plus(transit()));
  if (const auto* step = attack.forward(round)) psi = apply_unitary(psi, step->unitary, step->targets);
  return psi;
}

StateVector exact_round(const StateVector& env, const attacks::AttackSpec& attack, std::size_t round, Choice choice) {
  const auto idx = static_cast<std::uint32_t>(round);
  StateVector psi = after_forward(env, attack, round);
  psi = tensor(psi, StateVector::basis(alice_probe(idx), 2, 0));
  if (choice == Choice::Sift) psi = apply_unitary(psi, Unitary::cnot(), {transit(), alice_probe(idx)});
  if (const auto* step = attack.backward(round)) psi = apply_unitary(psi, step->unitary, step->targets);
  // [.., T, A(i)] -> [.., B(i), A(i)]
  return relabel(psi, transit(), bob_memory(idx));
}

StateVector evolve_exact(const attacks::AttackSpec& attack, std::span<const Choice> pattern) {
  StateVector psi = exact_initial_state(attack);
  for (std::size_t i = 0; i < pattern.size(); ++i) psi = exact_round(psi, attack, i, pattern[i]);
  return psi;
}

std::vector<Label> canonical_order(const SubsystemLayout& layout) {
  std::vector<Label> order;
  const auto bobs = layout.labels_with_role(Role::BobMemory);
  for (const auto& b : bobs) {
    order.push_back(b);
    if (layout.contains(alice_probe(b.index))) order.push_back(alice_probe(b.index));
  }
  for (const auto& l : layout.labels()) {
    if (l.role != Role::BobMemory && !(l.role == Role::AliceProbe && layout.contains(bob_memory(l.index)))) {
      order.push_back(l);
    }
  }
  return order;
}

std::vector<double> outcome_distribution(const StateVector& final_state, std::span<const Choice> pattern) {
  StateVector rotated = final_state;
  std::vector<Label> keep;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    if (pattern[i] == Choice::Ctrl) rotated = apply_unitary(rotated, Unitary::hadamard(), {bob_memory(idx)});
    keep.push_back(bob_memory(idx));
    keep.push_back(alice_probe(idx));
  }
  const auto& layout = rotated.layout();
  return kernels::marginal_probabilities(rotated.amps(), layout.dims(), layout.positions(keep));
}

}  // namespace sqkd::protocol
