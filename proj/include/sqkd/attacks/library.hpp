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
#include "sqkd/engine/rng.hpp"

namespace sqkd::attacks {

// Eve does nothing: a dimension-1 probe and no steps.
AttackSpec identity_attack();

// One probe qubit in |0>; on each of the two named rounds the transit qubit
// controls a NOT on the probe, which ends up holding the parity of Bob's two
// qubits. Backward steps are identity. Throws Errc::DuplicateRound.
AttackSpec cnot_parity_attack(std::size_t first_round, std::size_t second_round);

// Intercept-resend in the Z basis, written as a dilation: a fresh probe qubit
// per round receives a CNOT copy of the transit qubit. Eve's Z readout of the
// probe is deferred. Rounds >= `rounds` are not attacked.
AttackSpec measure_resend_z_attack(std::size_t rounds);

// A fresh |+> probe qubit per round is swapped with the transit qubit on the
// way out and swapped back on the way in. Invisible on reflected rounds, but
// Bob receives |+> instead of Alice's resent bit.
AttackSpec swap_attack(std::size_t rounds);

// Shared one-qubit probe |0>; every forward leg applies
// |0><0| (x) I + |1><1| (x) R(theta) with R the real rotation by theta.
// Throws Errc::ParamOutOfRange unless theta lies in [0, pi].
AttackSpec phase_probe_attack(double theta);

// Phase diag(1, e^{i phi}) on the transit qubit alone; the probe is trivial.
AttackSpec transit_phase_attack(double phi);

// Random attack that induces no CTRL or TEST error and never couples the
// transit qubit to the probe: forward = U (x) W_f, backward = D (x) W_b with
// D diagonal and U chosen so D U |+> is |+> up to phase; W_f, W_b random
// unitaries on a random-dimension probe.
AttackSpec random_decoupled_attack(std::size_t rounds, Rng& rng, std::size_t max_probe_dim = 3);

}  // namespace sqkd::attacks
