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

#include "sqkd/engine/rng.hpp"
#include "sqkd/engine/state.hpp"

namespace sqkd {

enum class Basis { Z, X };
enum class Outcome { Zero, One, Plus, Minus };

// |a> (x) |b>; layouts concatenate. Throws Errc::DuplicateLabel.
StateVector tensor(const StateVector& a, const StateVector& b);

// u acts on `targets` (first target = most significant factor of u).
// Throws Errc::UnknownLabel, Errc::DimensionMismatch.
StateVector apply_unitary(const StateVector& psi, const Unitary& u, std::span<const Label> targets);
StateVector apply_unitary(const StateVector& psi, const Unitary& u, std::initializer_list<Label> targets);
SubnormalizedVector apply_unitary(const SubnormalizedVector& psi, const Unitary& u,
                                  std::span<const Label> targets);

struct Measurement {
  Outcome outcome;
  StateVector collapsed;
  double prob;
};

// Projective qubit measurement; the collapsed state keeps the layout with the
// target left in the observed basis state. Throws Errc::NonQubitTarget.
Measurement measure(const StateVector& psi, Label target, Basis basis, Rng& rng);

// Born probability of `outcome` (Zero/One for Z, Plus/Minus for X).
double outcome_probability(const StateVector& psi, Label target, Outcome outcome);
double outcome_probability(const SubnormalizedVector& psi, Label target, Outcome outcome);

// In-place projection: amplitudes with target != basis_state are zeroed and
// the layout is unchanged. Throws Errc::IndexOutOfRange.
SubnormalizedVector project(const StateVector& psi, Label target, std::size_t basis_state);
SubnormalizedVector project(const SubnormalizedVector& psi, Label target, std::size_t basis_state);

// Like project, but removes the target subsystem from the layout.
SubnormalizedVector slice(const StateVector& psi, Label target, std::size_t basis_state);
SubnormalizedVector slice(const SubnormalizedVector& psi, Label target, std::size_t basis_state);

// Removes a subsystem that must already sit in `basis_state` (weight 1).
StateVector squeeze(const StateVector& psi, Label target, std::size_t basis_state);

StateVector relabel(const StateVector& psi, Label from, Label to);

// Reorders subsystems; `order` must be a permutation of the layout labels.
StateVector permute(const StateVector& psi, std::span<const Label> order);

// Reduced state on `keep`, in layout order of `keep` as given.
// Throws Errc::UnknownLabel, Errc::EmptyKeepSet.
DensityMatrix partial_trace(const StateVector& psi, std::span<const Label> keep);
DensityMatrix partial_trace(const StateVector& psi, std::initializer_list<Label> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Label> keep);

// One unnormalized block per joint basis state x of `condition`
// (row-major over `condition`): Tr_rest[(|x><x| (x) I) |psi><psi|] on `keep`.
// The traces of the blocks are the Born probabilities of x.
std::vector<Matrix> conditional_blocks(const StateVector& psi, std::span<const Label> condition,
                                       std::span<const Label> keep);

std::vector<double> eigenvalues(const Matrix& hermitian);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance(const Matrix& a, const Matrix& b);
double purity(const DensityMatrix& rho);
// Von Neumann entropy in bits.
double entropy(const DensityMatrix& rho);
double entropy(const Matrix& rho);

cplx inner(const StateVector& a, const StateVector& b);

// max_i |a_i - e^{i phi} b_i| with phi chosen from the overlap <b|a>.
// Layouts must match. Returns +inf when they do not.
double distance_up_to_phase(const StateVector& a, const StateVector& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

}  // namespace sqkd
