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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqkd/attacks/attack_spec.hpp"
#include "sqkd/engine/state.hpp"
#include "sqkd/protocol/protocol.hpp"

namespace sqkd::analysis {

// Eve's two unnormalized branch states for one round: her forward step is
// applied to |env> (x) |+>_T and the transit qubit is projected on |0>, |1>.
// Both vectors live on the environment layout (transit removed), so when env
// is a product of Bob+Alice registers and Eve's probe they factor the same way.
struct Branches {
  SubnormalizedVector e0;
  SubnormalizedVector e1;
};

// Throws Errc::AttackLayoutMismatch when env lacks a probe the round targets.
Branches extract_branches(const attacks::AttackSpec& attack, std::size_t round, const StateVector& env);

struct ConstraintReport {
  std::size_t round = 0;
  // Probability that a SIFT round's returned qubit no longer carries Alice's
  // bit: ||(<1-b| (x) I) V |b>|E'_b>||^2 summed over b.
  double test_residual = 0.0;
  // Born probability that Bob reads |-> on a reflected qubit.
  double ctrl_error_prob = 0.0;
  // ||F'_0 - F'_1|| with F'_b = (<b| (x) I) V |b>|E'_b> (unnormalized).
  double f_distance = 0.0;

  double residual() const { return test_residual + ctrl_error_prob; }
};

// Constraints of `round` for the environment state `env` reached so far.
ConstraintReport constraint_at(const attacks::AttackSpec& attack, std::size_t round, const StateVector& env);

// Constraints of `round` after evolving through `history` (length == round;
// empty means every earlier round was CTRL). Throws Errc::InvalidConfig on a
// history of the wrong length, Errc::ExactCapExceeded.
ConstraintReport constraint_check(const attacks::AttackSpec& attack, std::size_t round, std::string_view history = {});

struct LeakageReport {
  std::string pattern;
  // Trace distance between Eve's states conditioned on Alice's bit 0 vs 1,
  // one entry per SIFT position in pattern order. Zero when the bit is
  // (numerically) deterministic.
  std::vector<double> per_bit_trace_distance;
  // Holevo quantity, in bits, of Eve's ensemble indexed by all of Alice's
  // SIFT bits jointly.
  double holevo_bound = 0.0;
  double max_leakage = 0.0;
};

// Leakage of an exact final state (environment layout) produced by `pattern`.
LeakageReport leakage_of(const StateVector& final_state, std::span<const protocol::Choice> pattern);

// Throws Errc::ExactCapExceeded, Errc::InvalidConfig for a bad pattern.
LeakageReport eve_leakage(const attacks::AttackSpec& attack, std::string_view pattern,
                          std::size_t cap = protocol::kDefaultExactRoundCap);

// Margin between the residual tolerance and the tolerated leakage in
// theorem_check. A numerical allowance, not a bound from the proof.
inline constexpr double kLeakageMargin = 10.0;

struct TheoremVerdict {
  double eps = 0.0;
  // max over patterns and rounds of test_residual + ctrl_error_prob.
  double max_residual = 0.0;
  std::string residual_pattern;
  std::size_t residual_round = 0;
  double max_leakage = 0.0;
  std::string leakage_pattern;
  std::size_t patterns_checked = 0;
  // PASS iff max_residual > eps or max_leakage <= kLeakageMargin * eps.
  bool pass = false;
};

// Every pattern of length 1..max_len when max_len <= 6; otherwise 64 random
// patterns of length max_len drawn from `seed`.
std::vector<std::string> default_patterns(std::size_t max_len, std::uint64_t seed = 0);

// Evaluates the zero-error => zero-leakage implication. Residuals at round i
// of a pattern are taken on the state reached through the pattern's first i
// choices; shared prefixes are evolved once.
TheoremVerdict theorem_check(const attacks::AttackSpec& attack, std::span<const std::string> patterns, double eps,
                             std::size_t cap = protocol::kDefaultExactRoundCap);

inline constexpr double kProductTol = 1e-8;

struct ProductStructureReport {
  std::string pattern;
  bool precondition_met = false;
  double max_residual = 0.0;
  // max componentwise |Psi - Phi (x) E| where Phi is the tensor of the
  // announced per-round states and E = (<Phi| (x) I)|Psi>; +inf when the
  // precondition fails.
  double deviation = 0.0;
  bool product_ok = false;
  // Non-product witness: purity of Bob's reduced memory state, and the purity
  // of the product of its single-qubit marginals.
  double bob_purity = 1.0;
  double marginal_product_purity = 1.0;
};

// Checks that the final Bob+Alice state is the tensor over rounds of |+>|0>
// (CTRL) and (|00>+|11>)/sqrt2 (SIFT), times Eve's final state. Attacks with
// nonzero residual (> 1e-9) only get the witness fields.
ProductStructureReport product_structure_check(const attacks::AttackSpec& attack, std::string_view pattern,
                                               std::size_t cap = protocol::kDefaultExactRoundCap);

// Per-round Bob+Alice state announced for a pattern, on (B0, A0, B1, A1, ...).
StateVector announced_state(std::span<const protocol::Choice> pattern);

}  // namespace sqkd::analysis
