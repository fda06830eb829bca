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

#include <span>
#include <vector>

#include "sqkd/attacks/attack_spec.hpp"
#include "sqkd/engine/state.hpp"
#include "sqkd/protocol/protocol.hpp"

// Exact statevector evolution of the protocol, shared with the analysis code.
//
// The state before round i (the "environment") is laid out as
// [Eve probe..., B0, A0, ..., B(i-1), A(i-1)]. A round appends the transit
// qubit in |+>, applies Eve's forward step, appends Alice's probe A(i) in |0>,
// XORs the transit qubit into it on SIFT, applies Eve's backward step and
// renames the transit qubit to B(i). Alice's probe exists on CTRL rounds too
// (left in |0>), so every round contributes a (B(i), A(i)) pair.
namespace sqkd::protocol {

// Throws Errc::ExactCapExceeded when rounds > cap or the joint state would
// exceed kMaxExactDimension amplitudes.
void check_exact_budget(const attacks::AttackSpec& attack, std::size_t rounds, std::size_t cap);

StateVector exact_initial_state(const attacks::AttackSpec& attack);

// |env> (x) |+>_T with Eve's forward step of `round` applied.
StateVector after_forward(const StateVector& env, const attacks::AttackSpec& attack, std::size_t round);

StateVector exact_round(const StateVector& env, const attacks::AttackSpec& attack, std::size_t round, Choice choice);

// Evolves the initial probe state through `pattern`; result in environment
// layout (probe first).
StateVector evolve_exact(const attacks::AttackSpec& attack, std::span<const Choice> pattern);

// B0, A0, B1, A1, ..., then Eve's probe labels in layout order.
std::vector<Label> canonical_order(const SubsystemLayout& layout);

// Joint distribution of the announced readings for a final exact state.
// Index bits, most significant first, are (b0, a0, b1, a1, ...): on CTRL
// rounds b = 1 means Bob read |->, a is always 0; on SIFT rounds b is Bob's Z
// reading and a is Alice's bit.
std::vector<double> outcome_distribution(const StateVector& final_state, std::span<const Choice> pattern);

}  // namespace sqkd::protocol
