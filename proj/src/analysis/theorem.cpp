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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <set>

#include "sqkd/analysis/analysis.hpp"
#include "sqkd/engine/ops.hpp"
#include "sqkd/engine/rng.hpp"
#include "sqkd/protocol/exact.hpp"

namespace sqkd::analysis {
namespace {

using protocol::Choice;

// Depth-first walk over the prefix tree of `patterns`, evolving each shared
// prefix once. on_round fires for every node that some pattern extends (the
// constraints of the next round depend only on the prefix); on_pattern fires
// for every requested pattern with its final state.
class PatternWalker {
 public:
  using RoundFn = std::function<void(const std::string& prefix, const ConstraintReport&)>;
  using PatternFn = std::function<void(const std::string& pattern, const StateVector& state)>;

  PatternWalker(const attacks::AttackSpec& attack, std::span<const std::string> patterns)
      : attack_(attack), terminal_(patterns.begin(), patterns.end()) {
    for (const auto& p : terminal_) {
      protocol::parse_pattern(p);
      for (std::size_t n = 0; n < p.size(); ++n) inner_.insert(p.substr(0, n));
    }
  }

  void walk(const RoundFn& on_round, const PatternFn& on_pattern) {
    visit("", protocol::exact_initial_state(attack_), on_round, on_pattern);
  }

 private:
  void visit(const std::string& prefix, const StateVector& env, const RoundFn& on_round, const PatternFn& on_pattern) {
    if (terminal_.contains(prefix)) on_pattern(prefix, env);
    if (!inner_.contains(prefix)) return;
    const std::size_t round = prefix.size();
    on_round(prefix, constraint_at(attack_, round, env));
    for (const char c : {'C', 'S'}) {
      const std::string next = prefix + c;
      if (!inner_.contains(next) && !terminal_.contains(next)) continue;
      visit(next, protocol::exact_round(env, attack_, round, c == 'C' ? Choice::Ctrl : Choice::Sift), on_round,
            on_pattern);
    }
  }

  const attacks::AttackSpec& attack_;
  std::set<std::string> terminal_;
  std::set<std::string> inner_;
};

std::size_t longest(std::span<const std::string> patterns) {
  std::size_t n = 0;
  for (const auto& p : patterns) n = std::max(n, p.size());
  return n;
}

}  // namespace

std::vector<std::string> default_patterns(std::size_t max_len, std::uint64_t seed) {
  std::vector<std::string> out;
  if (max_len <= 6) {
    for (std::size_t n = 1; n <= max_len; ++n) {
      for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        std::string p(n, 'C');
        for (std::size_t i = 0; i < n; ++i) {
          if ((bits >> (n - 1 - i)) & 1U) p[i] = 'S';
        }
        out.push_back(std::move(p));
      }
    }
    return out;
  }
  Rng rng(seed);
  for (int k = 0; k < 64; ++k) {
    std::string p(max_len, 'C');
    for (auto& c : p) c = rng.bernoulli(0.5) ? 'S' : 'C';
    out.push_back(std::move(p));
  }
  return out;
}

TheoremVerdict theorem_check(const attacks::AttackSpec& attack, std::span<const std::string> patterns, double eps,
                             std::size_t cap) {
  protocol::check_exact_budget(attack, longest(patterns), cap);
  TheoremVerdict v;
  v.eps = eps;
  v.patterns_checked = patterns.size();
  v.max_residual = -1.0;
  PatternWalker walker(attack, patterns);
  walker.walk(
      [&](const std::string& prefix, const ConstraintReport& r) {
        if (r.residual() > v.max_residual) {
          v.max_residual = r.residual();
          v.residual_pattern = prefix;
          v.residual_round = r.round;
        }
      },
      [&](const std::string& pattern, const StateVector& state) {
        const auto rep = leakage_of(state, protocol::parse_pattern(pattern));
        if (rep.max_leakage > v.max_leakage || v.leakage_pattern.empty()) {
          v.max_leakage = std::max(v.max_leakage, rep.max_leakage);
          v.leakage_pattern = pattern;
        }
      });
  v.max_residual = std::max(v.max_residual, 0.0);
  v.pass = v.max_residual > eps || v.max_leakage <= kLeakageMargin * eps;
  return v;
}

StateVector announced_state(std::span<const Choice> pattern) {
  StateVector psi = StateVector::vacuum();
  const double h = std::numbers::sqrt2 / 2.0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    SubsystemLayout pair({2, 2}, {bob_memory(idx), alice_probe(idx)});
    Amplitudes a = pattern[i] == Choice::Ctrl ? Amplitudes{h, 0.0, h, 0.0} : Amplitudes{h, 0.0, 0.0, h};
    psi = tensor(psi, StateVector(std::move(pair), std::move(a)));
  }
  return psi;
}

ProductStructureReport product_structure_check(const attacks::AttackSpec& attack, std::string_view pattern,
                                               std::size_t cap) {
  const auto choices = protocol::parse_pattern(pattern);
  protocol::check_exact_budget(attack, choices.size(), cap);

  ProductStructureReport rep;
  rep.pattern = std::string(pattern);
  StateVector env = protocol::exact_initial_state(attack);
  for (std::size_t i = 0; i < choices.size(); ++i) {
    rep.max_residual = std::max(rep.max_residual, constraint_at(attack, i, env).residual());
    env = protocol::exact_round(env, attack, i, choices[i]);
  }
  const StateVector psi = permute(env, protocol::canonical_order(env.layout()));

  const auto bobs = psi.layout().labels_with_role(Role::BobMemory);
  if (!bobs.empty()) {
    rep.bob_purity = purity(partial_trace(psi, bobs));
    for (const auto& b : bobs) {
      const Label one[] = {b};
      rep.marginal_product_purity *= purity(partial_trace(psi, one));
    }
  }

  rep.precondition_met = rep.max_residual <= kStateEqTol;
  if (!rep.precondition_met) {
    rep.deviation = std::numeric_limits<double>::infinity();
    return rep;
  }

  // psi viewed as a (Bob+Alice) x Eve matrix; contract the Bob+Alice index
  // with the announced state to recover Eve's part.
  const StateVector phi = announced_state(choices);
  const std::size_t n_ba = phi.dim();
  const std::size_t n_e = psi.dim() / n_ba;
  Amplitudes eve(n_e, 0.0);
  for (std::size_t a = 0; a < n_ba; ++a) {
    for (std::size_t e = 0; e < n_e; ++e) eve[e] += std::conj(phi[a]) * psi[a * n_e + e];
  }
  double dev = 0.0;
  for (std::size_t a = 0; a < n_ba; ++a) {
    for (std::size_t e = 0; e < n_e; ++e) dev = std::max(dev, std::abs(psi[a * n_e + e] - phi[a] * eve[e]));
  }
  rep.deviation = dev;
  rep.product_ok = dev <= kProductTol;
  return rep;
}

}  // namespace sqkd::analysis
