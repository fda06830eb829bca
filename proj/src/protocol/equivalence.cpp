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

#include "sqkd/protocol/equivalence.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "sqkd/engine/rng.hpp"
#include "sqkd/protocol/exact.hpp"

namespace sqkd::protocol {
namespace {

constexpr double kZeroProb = 1e-12;

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

// Exact distribution of one pattern plus the moments of its error counts.
struct PatternModel {
  std::vector<double> dist;
  Moments ctrl;
  Moments test;
  std::size_t n_ctrl = 0;
  std::size_t n_sift = 0;
};

struct Counts {
  std::size_t ctrl = 0;
  std::size_t test = 0;
};

Counts errors_of(std::size_t index, const std::vector<Choice>& pattern) {
  Counts c;
  const std::size_t n = pattern.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = (index >> (2 * (n - 1 - i) + 1)) & 1U;
    const auto a = (index >> (2 * (n - 1 - i))) & 1U;
    if (pattern[i] == Choice::Ctrl) {
      c.ctrl += b;
    } else {
      c.test += a != b ? 1 : 0;
    }
  }
  return c;
}

PatternModel model_of(const attacks::AttackSpec& attack, const std::vector<Choice>& pattern) {
  PatternModel m;
  m.dist = outcome_distribution(evolve_exact(attack, pattern), pattern);
  for (auto c : pattern) (c == Choice::Ctrl ? m.n_ctrl : m.n_sift)++;
  double c1 = 0, c2 = 0, t1 = 0, t2 = 0;
  for (std::size_t k = 0; k < m.dist.size(); ++k) {
    const auto e = errors_of(k, pattern);
    const double p = m.dist[k];
    c1 += p * static_cast<double>(e.ctrl);
    c2 += p * static_cast<double>(e.ctrl * e.ctrl);
    t1 += p * static_cast<double>(e.test);
    t2 += p * static_cast<double>(e.test * e.test);
  }
  m.ctrl = {c1, std::max(0.0, c2 - c1 * c1)};
  m.test = {t1, std::max(0.0, t2 - t1 * t1)};
  return m;
}

std::size_t reading_index(const Transcript& t) {
  std::size_t index = 0;
  for (const auto& r : t.records) {
    std::size_t b = 0;
    std::size_t a = 0;
    if (r.choice == Choice::Ctrl) {
      b = r.bob_x_outcome == XOutcome::Minus ? 1 : 0;
    } else {
      b = static_cast<std::size_t>(*r.bob_z_outcome);
      a = static_cast<std::size_t>(*r.alice_bit);
    }
    index = (index << 2) | (b << 1) | a;
  }
  return index;
}

double z_score(double observed, double expected, double var) {
  const double diff = observed - expected;
  if (var <= 0.0) return std::abs(diff) < 1e-9 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / std::sqrt(var);
}

}  // namespace

EquivalenceReport sift_equivalence_check(const ProtocolConfig& config, const attacks::AttackSpec& attack,
                                         std::size_t trials) {
  ProtocolConfig base = config;
  base.mode = Mode::Exact;
  base.validate();
  check_exact_budget(attack, base.rounds, base.exact_round_cap);

  std::vector<ProtocolConfig> cfgs(trials, base);
  for (std::size_t t = 0; t < trials; ++t) {
    cfgs[t].seed = split_seed(config.seed, t);
    cfgs[t].mode = Mode::Sampling;
  }

  std::vector<std::size_t> readings(trials);
  std::vector<std::string> patterns(trials);
  const auto n_trials = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < n_trials; ++t) {
    const Transcript tr = run_protocol(cfgs[t], attack);
    readings[t] = reading_index(tr);
    patterns[t] = pattern_string(tr.pattern());
  }

  std::map<std::string, PatternModel> models;
  std::map<std::string, std::map<std::size_t, std::size_t>> cells;
  for (std::size_t t = 0; t < trials; ++t) {
    if (!models.contains(patterns[t])) models.emplace(patterns[t], model_of(attack, parse_pattern(patterns[t])));
    ++cells[patterns[t]][readings[t]];
  }

  EquivalenceReport rep;
  rep.trials = trials;
  rep.rounds = config.rounds;
  Moments ctrl;
  Moments test;
  double ctrl_obs = 0;
  double test_obs = 0;
  std::size_t n_ctrl = 0;
  std::size_t n_sift = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& m = models.at(patterns[t]);
    ctrl.mean += m.ctrl.mean;
    ctrl.var += m.ctrl.var;
    test.mean += m.test.mean;
    test.var += m.test.var;
    n_ctrl += m.n_ctrl;
    n_sift += m.n_sift;
    const auto e = errors_of(readings[t], parse_pattern(patterns[t]));
    ctrl_obs += static_cast<double>(e.ctrl);
    test_obs += static_cast<double>(e.test);
  }
  auto per = [](double x, std::size_t n) { return n == 0 ? 0.0 : x / static_cast<double>(n); };
  rep.exact_ctrl_rate = per(ctrl.mean, n_ctrl);
  rep.sampled_ctrl_rate = per(ctrl_obs, n_ctrl);
  rep.exact_test_rate = per(test.mean, n_sift);
  rep.sampled_test_rate = per(test_obs, n_sift);
  rep.ctrl_z = z_score(ctrl_obs, ctrl.mean, ctrl.var);
  rep.test_z = z_score(test_obs, test.mean, test.var);

  for (const auto& [pattern, counts] : cells) {
    const auto& dist = models.at(pattern).dist;
    double n = 0;
    for (const auto& [idx, c] : counts) n += static_cast<double>(c);
    for (std::size_t k = 0; k < dist.size(); ++k) {
      const auto it = counts.find(k);
      const double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
      if (dist[k] < kZeroProb) {
        if (c > 0) ++rep.impossible_outcomes;
        continue;
      }
      const double z = z_score(c, n * dist[k], n * dist[k] * (1.0 - dist[k]));
      rep.max_cell_z = std::max(rep.max_cell_z, std::abs(z));
    }
  }
  rep.equivalent = std::abs(rep.ctrl_z) <= kEquivalenceSigmas && std::abs(rep.test_z) <= kEquivalenceSigmas &&
                   rep.impossible_outcomes == 0;
  return rep;
}

}  // namespace sqkd::protocol
