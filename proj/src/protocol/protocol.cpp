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

#include "sqkd/protocol/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqkd/engine/error.hpp"
#include "sqkd/engine/ops.hpp"
#include "sqkd/engine/rng.hpp"
#include "sqkd/protocol/exact.hpp"

namespace sqkd::protocol {
namespace {

bool in_unit_interval(double p) { return p >= 0.0 && p <= 1.0; }

StateVector apply_step(const StateVector& psi, const attacks::AttackStep* step) {
  return step ? apply_unitary(psi, step->unitary, step->targets) : psi;
}

// Removes a qubit that was just measured, given the reading.
StateVector drop_measured(const StateVector& psi, Label label, Outcome outcome) {
  switch (outcome) {
    case Outcome::Zero: return squeeze(psi, label, 0);
    case Outcome::One: return squeeze(psi, label, 1);
    case Outcome::Plus: return squeeze(apply_unitary(psi, Unitary::hadamard(), {label}), label, 0);
    case Outcome::Minus: return squeeze(apply_unitary(psi, Unitary::hadamard(), {label}), label, 1);
  }
  return psi;
}

int bit_of(Outcome o) { return o == Outcome::One || o == Outcome::Minus ? 1 : 0; }

class SamplingRun {
 public:
  SamplingRun(const ProtocolConfig& config, const attacks::AttackSpec& attack)
      : config_(config),
        attack_(attack),
        choices_(split_seed(config.seed, streams::kChoices)),
        meas_(split_seed(config.seed, streams::kMeasurements)),
        live_(attack.probe_blocks().size(), false) {}

  Transcript run() {
    Transcript t{config_, {}, std::nullopt};
    t.records.reserve(config_.rounds);
    for (std::size_t i = 0; i < config_.rounds; ++i) t.records.push_back(round(i));
    return t;
  }

 private:
  void activate(const attacks::AttackStep* step) {
    if (!step) return;
    for (const auto& l : step->targets) {
      if (l.role != Role::EveProbe) continue;
      const auto b = attack_.block_of(l);
      if (live_[b]) continue;
      state_ = tensor(state_, attack_.probe_blocks()[b]);
      live_[b] = true;
      pending_.push_back(b);
    }
  }

  // Probe blocks Eve never touches again can be read out and dropped without
  // changing any later statistics of Alice and Bob.
  void retire(std::size_t round) {
    std::vector<std::size_t> keep;
    for (const std::size_t b : pending_) {
      const auto last = attack_.last_use(b);
      const auto& block = attack_.probe_blocks()[b].layout();
      // Only qubit probes are read out; larger ones simply stay live.
      if ((last && *last > round) || std::ranges::any_of(block.dims(), [](std::size_t d) { return d != 2; })) {
        keep.push_back(b);
        continue;
      }
      for (const auto& l : block.labels()) {
        auto m = measure(state_, l, Basis::Z, meas_);
        state_ = drop_measured(m.collapsed, l, m.outcome);
      }
    }
    pending_ = std::move(keep);
  }

  RoundRecord round(std::size_t i) {
    RoundRecord rec;
    rec.index = i;
    const auto* fwd = attack_.forward(i);
    const auto* bwd = attack_.backward(i);
    activate(fwd);
    activate(bwd);

    StateVector psi = apply_step(tensor(state_, StateVector::plus(transit())), fwd);
    rec.choice = choices_.bernoulli(config_.ctrl_prob) ? Choice::Ctrl : Choice::Sift;
    if (rec.choice == Choice::Sift) {
      auto m = measure(psi, transit(), Basis::Z, meas_);
      rec.alice_bit = bit_of(m.outcome);
      psi = std::move(m.collapsed);
    }
    psi = apply_step(psi, bwd);

    auto bob = measure(psi, transit(), rec.choice == Choice::Ctrl ? Basis::X : Basis::Z, meas_);
    if (rec.choice == Choice::Ctrl) {
      rec.bob_x_outcome = bob.outcome == Outcome::Plus ? XOutcome::Plus : XOutcome::Minus;
    } else {
      rec.bob_z_outcome = bit_of(bob.outcome);
    }
    state_ = drop_measured(bob.collapsed, transit(), bob.outcome);
    retire(i);
    return rec;
  }

  const ProtocolConfig& config_;
  const attacks::AttackSpec& attack_;
  Rng choices_;
  Rng meas_;
  StateVector state_ = StateVector::vacuum();
  std::vector<bool> live_;
  std::vector<std::size_t> pending_;  // live blocks not yet read out
};

void read_out_exact(Transcript& t, Rng& rng) {
  const auto pattern = t.pattern();
  const auto dist = outcome_distribution(*t.final_state, pattern);
  const double u = rng.uniform();
  std::size_t index = dist.size() - 1;
  double acc = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    acc += dist[k];
    if (u < acc) {
      index = k;
      break;
    }
  }
  const std::size_t n = pattern.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int b = static_cast<int>((index >> (2 * (n - 1 - i) + 1)) & 1U);
    const int a = static_cast<int>((index >> (2 * (n - 1 - i))) & 1U);
    auto& rec = t.records[i];
    if (rec.choice == Choice::Ctrl) {
      rec.bob_x_outcome = b ? XOutcome::Minus : XOutcome::Plus;
    } else {
      rec.bob_z_outcome = b;
      rec.alice_bit = a;
    }
  }
}

void require_complete(const Transcript& t, bool roles) {
  if (t.records.size() != t.config.rounds) {
    throw Error(Errc::IncompleteTranscript, "transcript has " + std::to_string(t.records.size()) + " of " +
                                                std::to_string(t.config.rounds) + " rounds");
  }
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const auto& r = t.records[i];
    const bool ok = r.index == i && (r.choice == Choice::Ctrl ? r.bob_x_outcome.has_value() && !r.alice_bit
                                                              : r.alice_bit.has_value() && r.bob_z_outcome.has_value());
    if (!ok) throw Error(Errc::IncompleteTranscript, "round " + std::to_string(i) + " lacks its readings");
    if (roles && r.role == RoundRole::Unassigned) {
      throw Error(Errc::IncompleteTranscript, "round " + std::to_string(i) + " has no role");
    }
  }
}

}  // namespace

void ProtocolConfig::validate() const {
  if (rounds < 1) throw Error(Errc::InvalidConfig, "rounds must be >= 1");
  if (!in_unit_interval(ctrl_prob)) throw Error(Errc::InvalidConfig, "ctrl_prob must lie in [0, 1]");
  if (!in_unit_interval(test_fraction)) throw Error(Errc::InvalidConfig, "test_fraction must lie in [0, 1]");
  if (!(abort_threshold >= 0.0)) throw Error(Errc::InvalidConfig, "abort_threshold must be >= 0");
  if (mode == Mode::Exact && rounds > exact_round_cap) {
    throw Error(Errc::ExactCapExceeded, std::to_string(rounds) + " rounds exceeds the exact round cap of " +
                                            std::to_string(exact_round_cap));
  }
}

std::vector<Choice> Transcript::pattern() const {
  std::vector<Choice> p;
  p.reserve(records.size());
  for (const auto& r : records) p.push_back(r.choice);
  return p;
}

std::vector<Choice> draw_choices(const ProtocolConfig& config) {
  Rng rng(split_seed(config.seed, streams::kChoices));
  std::vector<Choice> out(config.rounds);
  for (auto& c : out) c = rng.bernoulli(config.ctrl_prob) ? Choice::Ctrl : Choice::Sift;
  return out;
}

Transcript run_protocol(const ProtocolConfig& config, const attacks::AttackSpec& attack) {
  config.validate();
  if (config.mode == Mode::Sampling) return SamplingRun(config, attack).run();

  check_exact_budget(attack, config.rounds, config.exact_round_cap);
  const auto pattern = draw_choices(config);
  const StateVector psi = evolve_exact(attack, pattern);
  Transcript t{config, {}, permute(psi, canonical_order(psi.layout()))};
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    RoundRecord r;
    r.index = i;
    r.choice = pattern[i];
    t.records.push_back(r);
  }
  return t;
}

RunStats classical_phase(Transcript& transcript, std::uint64_t seed) {
  if (transcript.records.size() != transcript.config.rounds) {
    throw Error(Errc::IncompleteTranscript, "transcript is missing rounds");
  }
  if (transcript.config.mode == Mode::Exact) {
    if (!transcript.final_state) throw Error(Errc::IncompleteTranscript, "exact transcript has no final state");
    Rng readout(split_seed(seed, 1));
    read_out_exact(transcript, readout);
  }
  require_complete(transcript, false);

  // CTRL rounds are announced; a uniform sample of the SIFT rounds is tested.
  std::vector<std::size_t> sift;
  for (auto& r : transcript.records) {
    if (r.choice == Choice::Ctrl) {
      r.role = RoundRole::Ctrl;
      r.error = r.bob_x_outcome == XOutcome::Minus;
    } else {
      r.role = RoundRole::Key;
      r.error.reset();
      sift.push_back(r.index);
    }
  }
  const auto n_test = static_cast<std::size_t>(std::llround(transcript.config.test_fraction * static_cast<double>(sift.size())));
  Rng sampler(split_seed(seed, 0));
  for (std::size_t k = 0; k < n_test; ++k) {
    std::swap(sift[k], sift[k + sampler.below(sift.size() - k)]);
    auto& r = transcript.records[sift[k]];
    r.role = RoundRole::Test;
    r.error = r.bob_z_outcome != r.alice_bit;
  }
  return compute_stats(transcript);
}

RunStats compute_stats(const Transcript& transcript) {
  require_complete(transcript, true);
  RunStats s;
  std::size_t mismatches = 0;
  for (const auto& r : transcript.records) {
    switch (r.role) {
      case RoundRole::Ctrl:
        ++s.n_ctrl;
        s.ctrl_errors += r.error.value_or(false) ? 1 : 0;
        break;
      case RoundRole::Test:
        ++s.n_test;
        s.test_errors += r.error.value_or(false) ? 1 : 0;
        break;
      case RoundRole::Key:
        ++s.n_key;
        s.key_alice.push_back(static_cast<char>('0' + *r.alice_bit));
        s.key_bob.push_back(static_cast<char>('0' + *r.bob_z_outcome));
        mismatches += *r.alice_bit != *r.bob_z_outcome ? 1 : 0;
        break;
      case RoundRole::Unassigned: break;
    }
  }
  auto rate = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  s.ctrl_error_rate = rate(s.ctrl_errors, s.n_ctrl);
  s.test_error_rate = rate(s.test_errors, s.n_test);
  s.key_mismatch_rate = rate(mismatches, s.n_key);
  const double threshold = transcript.config.abort_threshold;
  s.aborted = s.ctrl_error_rate > threshold || s.test_error_rate > threshold;
  return s;
}

RunResult simulate(const ProtocolConfig& config, const attacks::AttackSpec& attack) {
  RunResult r{run_protocol(config, attack), {}};
  r.stats = classical_phase(r.transcript, split_seed(config.seed, streams::kClassical));
  return r;
}

std::vector<Choice> parse_pattern(std::string_view pattern) {
  std::vector<Choice> out;
  for (char c : pattern) {
    if (c == 'C' || c == 'c') {
      out.push_back(Choice::Ctrl);
    } else if (c == 'S' || c == 's') {
      out.push_back(Choice::Sift);
    } else {
      throw Error(Errc::InvalidConfig, std::string("pattern character '") + c + "' is not C or S");
    }
  }
  return out;
}

std::string pattern_string(std::span<const Choice> pattern) {
  std::string s;
  for (auto c : pattern) s.push_back(c == Choice::Ctrl ? 'C' : 'S');
  return s;
}

std::string_view to_string(Mode m) { return m == Mode::Exact ? "exact" : "sampling"; }
std::string_view to_string(Choice c) { return c == Choice::Ctrl ? "CTRL" : "SIFT"; }
std::string_view to_string(XOutcome o) { return o == XOutcome::Plus ? "plus" : "minus"; }
std::string_view to_string(RoundRole r) {
  switch (r) {
    case RoundRole::Ctrl: return "Ctrl";
    case RoundRole::Test: return "Test";
    case RoundRole::Key: return "Key";
    case RoundRole::Unassigned: return "Unassigned";
  }
  return "Unassigned";
}

}  // namespace sqkd::protocol
