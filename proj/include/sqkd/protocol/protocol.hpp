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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqkd/attacks/attack_spec.hpp"
#include "sqkd/engine/state.hpp"

namespace sqkd::protocol {

enum class Mode { Exact, Sampling };
// Alice reflects (CTRL) or measures in Z and resends her result (SIFT).
enum class Choice { Ctrl, Sift };
enum class RoundRole { Unassigned, Ctrl, Test, Key };
enum class XOutcome { Plus, Minus };

inline constexpr std::size_t kDefaultExactRoundCap = 8;
// Largest joint amplitude count exact mode will allocate (64 MiB of amplitudes).
inline constexpr std::size_t kMaxExactDimension = std::size_t{1} << 22;

// Independent RNG streams of one run, derived with split_seed(config.seed, id).
namespace streams {
inline constexpr std::uint64_t kChoices = 0;
inline constexpr std::uint64_t kClassical = 1;
inline constexpr std::uint64_t kMeasurements = 2;
}  // namespace streams

struct ProtocolConfig {
  std::size_t rounds = 1;
  double ctrl_prob = 0.5;
  double test_fraction = 0.5;
  std::uint64_t seed = 0;
  Mode mode = Mode::Sampling;
  double abort_threshold = 0.0;
  std::size_t exact_round_cap = kDefaultExactRoundCap;

  // Throws Errc::InvalidConfig; Errc::ExactCapExceeded for exact runs over the cap.
  void validate() const;
  bool operator==(const ProtocolConfig&) const = default;
};

struct RoundRecord {
  std::size_t index = 0;
  Choice choice = Choice::Ctrl;
  std::optional<int> alice_bit;
  RoundRole role = RoundRole::Unassigned;
  std::optional<XOutcome> bob_x_outcome;
  // Bob's Z reading of a returned SIFT qubit; his raw key bit on Key rounds.
  std::optional<int> bob_z_outcome;
  std::optional<bool> error;

  bool operator==(const RoundRecord&) const = default;
};

struct Transcript {
  ProtocolConfig config;
  std::vector<RoundRecord> records;
  // Exact mode only: joint state ordered B0 A0 B1 A1 ... then Eve's probe.
  std::optional<StateVector> final_state;

  std::vector<Choice> pattern() const;
};

struct RunStats {
  std::size_t n_ctrl = 0;
  std::size_t n_test = 0;
  std::size_t n_key = 0;
  std::size_t ctrl_errors = 0;
  std::size_t test_errors = 0;
  double ctrl_error_rate = 0.0;
  double test_error_rate = 0.0;
  std::string key_alice;
  std::string key_bob;
  double key_mismatch_rate = 0.0;
  bool aborted = false;

  bool operator==(const RunStats&) const = default;
};

// Runs all N rounds: Bob emits |+>, Eve's forward step, Alice's CTRL/SIFT,
// Eve's backward step, Bob stores the returned qubit.
//  - Sampling: Alice's SIFT is a Z measurement and resend; Bob's reading of
//    each returned qubit (X for CTRL, Z for SIFT) is recorded on arrival and
//    disclosed later. Probe subsystems Eve never touches again are measured
//    out to keep the live state small.
//  - Exact: Alice's SIFT is a CNOT onto a fresh probe qubit; the full joint
//    state is kept in final_state and read out by classical_phase.
// Throws Errc::ExactCapExceeded, Errc::AttackLayoutMismatch.
Transcript run_protocol(const ProtocolConfig& config, const attacks::AttackSpec& attack);

// Announcement and verification: Exact transcripts are first read out by
// measuring Bob's memory (X on CTRL, Z on SIFT) and Alice's probes. SIFT
// rounds are split uniformly without replacement into TEST
// (round(test_fraction * n_sift) of them) and Key. Fills roles, outcomes and
// error flags in place. Throws Errc::IncompleteTranscript.
RunStats classical_phase(Transcript& transcript, std::uint64_t seed);

// Statistics of a transcript whose classical phase has completed.
RunStats compute_stats(const Transcript& transcript);

struct RunResult {
  Transcript transcript;
  RunStats stats;
};

// run_protocol, then classical_phase on the kClassical stream.
RunResult simulate(const ProtocolConfig& config, const attacks::AttackSpec& attack);

// Alice's choices for a run, drawn from the kChoices stream.
std::vector<Choice> draw_choices(const ProtocolConfig& config);

// 'C' = CTRL, 'S' = SIFT. Throws Errc::InvalidConfig on other characters.
std::vector<Choice> parse_pattern(std::string_view pattern);
std::string pattern_string(std::span<const Choice> pattern);

std::string_view to_string(Mode m);
std::string_view to_string(Choice c);
std::string_view to_string(RoundRole r);
std::string_view to_string(XOutcome o);

}  // namespace sqkd::protocol
