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

#include "sqkd/analysis/analysis.hpp"
#include "sqkd/engine/ops.hpp"
#include "sqkd/protocol/exact.hpp"

namespace sqkd::analysis {
namespace {

// Below this probability a bit value counts as never occurring.
constexpr double kNegligible = 1e-12;

}  // namespace

LeakageReport leakage_of(const StateVector& final_state, std::span<const protocol::Choice> pattern) {
  LeakageReport rep;
  rep.pattern = protocol::pattern_string(pattern);

  std::vector<Label> condition;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == protocol::Choice::Sift) condition.push_back(alice_probe(static_cast<std::uint32_t>(i)));
  }
  if (condition.empty()) return rep;
  const auto eve = final_state.layout().labels_with_role(Role::EveProbe);
  const auto blocks = conditional_blocks(final_state, condition, eve);

  const std::size_t k = condition.size();
  const auto d = blocks.front().rows();
  for (std::size_t j = 0; j < k; ++j) {
    Matrix rho[2] = {Matrix::Zero(d, d), Matrix::Zero(d, d)};
    const std::size_t bit = std::size_t{1} << (k - 1 - j);
    for (std::size_t x = 0; x < blocks.size(); ++x) rho[(x & bit) ? 1 : 0] += blocks[x];
    const double p0 = rho[0].trace().real();
    const double p1 = rho[1].trace().real();
    const double td = std::min(p0, p1) < kNegligible ? 0.0 : trace_distance(rho[0] / p0, rho[1] / p1);
    rep.per_bit_trace_distance.push_back(td);
    rep.max_leakage = std::max(rep.max_leakage, td);
  }

  Matrix avg = Matrix::Zero(d, d);
  double conditional = 0.0;
  for (const auto& b : blocks) {
    avg += b;
    const double p = b.trace().real();
    if (p > kNegligible) conditional += p * entropy(Matrix(b / p));
  }
  rep.holevo_bound = std::max(0.0, entropy(avg) - conditional);
  return rep;
}

LeakageReport eve_leakage(const attacks::AttackSpec& attack, std::string_view pattern, std::size_t cap) {
  const auto choices = protocol::parse_pattern(pattern);
  protocol::check_exact_budget(attack, choices.size(), cap);
  return leakage_of(protocol::evolve_exact(attack, choices), choices);
}

}  // namespace sqkd::analysis
