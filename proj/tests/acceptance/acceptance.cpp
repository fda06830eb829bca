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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sqkd/analysis/analysis.hpp"
#include "sqkd/attacks/library.hpp"
#include "sqkd/cli/commands.hpp"
#include "sqkd/engine/ops.hpp"
#include "sqkd/engine/random.hpp"
#include "sqkd/engine/rng.hpp"
#include "sqkd/protocol/equivalence.hpp"
#include "sqkd/protocol/exact.hpp"
#include "sqkd/protocol/protocol.hpp"
#include "sqkd/protocol/transcript_io.hpp"
#include "support/oracles.hpp"

using namespace sqkd;
using protocol::Choice;
using protocol::Mode;
using protocol::ProtocolConfig;

namespace {

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "violated: " + what;
    }
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ProtocolConfig config(std::size_t rounds, std::uint64_t seed) {
  ProtocolConfig c;
  c.rounds = rounds;
  c.seed = seed;
  return c;
}

Result robustness_baseline() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  auto c = config(10000, 20260101);
  c.ctrl_prob = 0.5;
  c.test_fraction = 0.5;
  const auto run = protocol::simulate(c, attacks::identity_attack());
  const double dt = seconds_since(t0);
  r.require(run.stats.ctrl_error_rate == 0.0, "ctrl_error_rate == 0");
  r.require(run.stats.test_error_rate == 0.0, "test_error_rate == 0");
  r.require(run.stats.key_mismatch_rate == 0.0, "key_mismatch_rate == 0");
  r.require(dt < 5.0, "runtime < 5 s");
  r.note("n_ctrl=" + std::to_string(run.stats.n_ctrl) + " n_test=" + std::to_string(run.stats.n_test) +
         " n_key=" + std::to_string(run.stats.n_key) + " runtime=" + fmt(dt) + "s");
  return r;
}

Result counterexample_state() {
  Result r;
  auto c = config(2, 7);
  c.mode = Mode::Exact;
  c.ctrl_prob = 1.0;
  const auto t = protocol::run_protocol(c, attacks::cnot_parity_attack(0, 1));
  const auto psi = squeeze(squeeze(*t.final_state, alice_probe(0), 0), alice_probe(1), 0);
  Amplitudes want(8, 0.0);
  want[0b000] = want[0b110] = want[0b011] = want[0b101] = 0.5;
  const StateVector target(SubsystemLayout({2, 2, 2}, {bob_memory(0), bob_memory(1), eve_probe(0)}), want);
  const double dist = distance_up_to_phase(psi, target);
  const double bob = purity(partial_trace(psi, {bob_memory(0), bob_memory(1)}));
  const double marg = purity(partial_trace(psi, {bob_memory(0)})) * purity(partial_trace(psi, {bob_memory(1)}));
  r.require(dist <= 1e-9, "state distance <= 1e-9");
  r.require(std::abs(bob - 0.5) <= 1e-9, "Bob purity = 0.5 +- 1e-9");
  r.require(bob > marg, "Bob purity > marginal-product purity");
  r.require(std::abs(marg - 0.25) <= 1e-9, "marginal-product purity = 0.25");
  r.note("distance=" + fmt(dist) + " bob_purity=" + fmt(bob) + " marginal_product=" + fmt(marg));
  return r;
}

Result counterexample_statistics() {
  Result r;
  const std::size_t trials = 10000;
  const auto attack = attacks::cnot_parity_attack(0, 1);
  std::size_t counts[2][2] = {{0, 0}, {0, 0}};
  std::size_t minus[2] = {0, 0};
  for (std::size_t k = 0; k < trials; ++k) {
    auto c = config(2, split_seed(99, k));
    c.ctrl_prob = 1.0;
    const auto t = protocol::run_protocol(c, attack);
    const int b0 = *t.records[0].bob_x_outcome == protocol::XOutcome::Minus ? 1 : 0;
    const int b1 = *t.records[1].bob_x_outcome == protocol::XOutcome::Minus ? 1 : 0;
    ++counts[b0][b1];
    minus[0] += b0;
    minus[1] += b1;
  }
  const double n = static_cast<double>(trials);
  const double pp = counts[0][0] / n, mm = counts[1][1] / n;
  r.require(counts[0][1] == 0 && counts[1][0] == 0, "only (+,+) and (-,-) occur");
  r.require(std::abs(pp - 0.5) <= 0.02, "freq(+,+) = 0.5 +- 0.02");
  r.require(std::abs(mm - 0.5) <= 0.02, "freq(-,-) = 0.5 +- 0.02");
  r.require(std::abs(minus[0] / n - 0.5) <= 0.02 && std::abs(minus[1] / n - 0.5) <= 0.02,
            "per-qubit CTRL error = 0.5 +- 0.02");
  r.note("(+,+)=" + fmt(pp) + " (-,-)=" + fmt(mm) + " (+,-)=" + std::to_string(counts[0][1]) +
         " (-,+)=" + std::to_string(counts[1][0]) + " err0=" + fmt(minus[0] / n) + " err1=" + fmt(minus[1] / n));
  return r;
}

Result constraint_theorem_suite() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<attacks::AttackSpec> list = {attacks::identity_attack(), attacks::phase_probe_attack(0.0)};
  Rng rng(4242);
  for (int i = 0; i < 50; ++i) list.push_back(attacks::random_decoupled_attack(6, rng));
  const auto patterns = analysis::default_patterns(6);
  double worst_res = 0.0, worst_leak = 0.0;
  bool all_pass = true;
  for (const auto& a : list) {
    const auto v = analysis::theorem_check(a, patterns, 1e-9);
    worst_res = std::max(worst_res, v.max_residual);
    worst_leak = std::max(worst_leak, v.max_leakage);
    all_pass = all_pass && v.pass;
  }
  const double dt = seconds_since(t0);
  r.require(worst_res <= 1e-9, "residuals <= 1e-9 on every round");
  r.require(worst_leak <= 1e-8, "leakage <= 1e-8 over all patterns");
  r.require(all_pass, "theorem verdict PASS");
  r.require(dt < 60.0, "runtime < 60 s");
  r.note(std::to_string(list.size()) + " attacks x " + std::to_string(patterns.size()) +
         " patterns; max_residual=" + fmt(worst_res) + " max_leakage=" + fmt(worst_leak) + " runtime=" + fmt(dt) + "s");
  return r;
}

// One phase-probe round from hand-built gates on qubits [E, T, A].
std::pair<double, double> phase_probe_oracle(double theta) {
  const double h = 1.0 / std::sqrt(2.0), c = std::cos(theta), s = std::sin(theta);
  Eigen::MatrixXcd cr = Eigen::MatrixXcd::Identity(4, 4);
  cr(2, 2) = c;
  cr(2, 3) = -s;
  cr(3, 2) = s;
  cr(3, 3) = c;
  Eigen::MatrixXcd had(2, 2);
  had << h, h, h, -h;
  Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  oracle::Qubits q;
  q.n = 1;
  q.amps = {1.0, 0.0};
  q.append({h, h});
  q.append({1.0, 0.0});
  q.apply(cr, {1, 0});
  oracle::Qubits ctrl = q;
  ctrl.apply(had, {1});
  double err = 0.0;
  for (std::size_t i = 0; i < ctrl.amps.size(); ++i) {
    if (i & ctrl.bit(1)) err += std::norm(ctrl.amps[i]);
  }
  q.apply(cnot, {1, 2});
  const auto blocks = oracle::eve_conditionals(q, 1, {Choice::Sift});
  const double leak =
      oracle::trace_norm_half(blocks[0] / blocks[0].trace().real() - blocks[1] / blocks[1].trace().real());
  return {err, leak};
}

Result tradeoff_curve() {
  Result r;
  std::vector<double> grid;
  for (int k = 0; k <= 15; ++k) grid.push_back(0.1 * k);
  grid.push_back(std::numbers::pi / 2);
  const auto rows = cli::scan("phase_probe", "theta", grid);
  double worst_ctrl = 0.0, worst_leak = 0.0, worst_oracle = 0.0;
  for (const auto& row : rows) {
    worst_ctrl = std::max(worst_ctrl, std::abs(row.ctrl_error - (1 - std::cos(row.param)) / 2));
    worst_leak = std::max(worst_leak, std::abs(row.trace_distance - std::sin(row.param)));
    const auto [err, leak] = phase_probe_oracle(row.param);
    worst_oracle = std::max({worst_oracle, std::abs(err - row.ctrl_error), std::abs(leak - row.trace_distance)});
  }
  r.require(rows.size() == grid.size(), "one row per grid point");
  r.require(worst_ctrl <= 1e-9, "ctrl_error = (1-cos)/2 within 1e-9");
  r.require(worst_leak <= 1e-9, "leakage = sin within 1e-9");
  r.require(worst_oracle <= 1e-9, "agrees with one-round brute-force oracle");
  r.require(rows[0].ctrl_error == 0.0 && rows[0].trace_distance == 0.0, "both exactly 0 at theta=0");
  r.note(std::to_string(rows.size()) + " points; max |ctrl-closed|=" + fmt(worst_ctrl) +
         " max |leak-closed|=" + fmt(worst_leak) + " max |lib-oracle|=" + fmt(worst_oracle));
  return r;
}

Result complementary_attacks() {
  Result r;
  const std::size_t n = 20000;  // ~1e4 CTRL and ~1e4 TEST rounds
  auto c = config(n, 555);
  c.test_fraction = 1.0;
  const auto mr = protocol::simulate(c, attacks::measure_resend_z_attack(n)).stats;
  const auto sw = protocol::simulate(c, attacks::swap_attack(n)).stats;
  const double mr_leak = analysis::eve_leakage(attacks::measure_resend_z_attack(1), "S").max_leakage;
  const double sw_leak = analysis::eve_leakage(attacks::swap_attack(1), "S").max_leakage;
  r.require(mr.test_error_rate == 0.0, "measure_resend_z test_error = 0");
  r.require(std::abs(mr.ctrl_error_rate - 0.5) <= 0.02, "measure_resend_z ctrl_error = 0.5 +- 0.02");
  r.require(std::abs(mr_leak - 1.0) <= 1e-9, "measure_resend_z leakage = 1 +- 1e-9");
  r.require(std::abs(sw.test_error_rate - 0.5) <= 0.02, "swap test_error = 0.5 +- 0.02");
  r.require(sw.ctrl_error_rate == 0.0, "swap ctrl_error = 0");
  r.require(std::abs(sw_leak - 1.0) <= 1e-9, "swap leakage = 1 +- 1e-9");
  r.note("measure_resend_z (test, ctrl, leak)=(" + fmt(mr.test_error_rate) + ", " + fmt(mr.ctrl_error_rate) + ", " +
         fmt(mr_leak) + ") n_ctrl=" + std::to_string(mr.n_ctrl) + "; swap=(" + fmt(sw.test_error_rate) + ", " +
         fmt(sw.ctrl_error_rate) + ", " + fmt(sw_leak) + ") n_test=" + std::to_string(sw.n_test));
  return r;
}

Result product_structure() {
  Result r;
  double worst = 0.0;
  bool all_ok = true;
  const auto patterns = analysis::default_patterns(4);
  for (const auto& p : patterns) {
    const auto rep = analysis::product_structure_check(attacks::identity_attack(), p);
    worst = std::max(worst, rep.deviation);
    all_ok = all_ok && rep.precondition_met;
  }
  r.require(all_ok, "precondition met");
  r.require(worst <= 1e-9, "deviation <= 1e-9");
  r.note(std::to_string(patterns.size()) + " patterns; max deviation=" + fmt(worst));
  return r;
}

Result mode_equivalence() {
  Result r;
  const std::size_t rounds = 4, trials = 2500;  // 1e4 rounds per attack
  std::vector<attacks::AttackSpec> list = {attacks::identity_attack(), attacks::cnot_parity_attack(0, 1),
                                           attacks::measure_resend_z_attack(rounds), attacks::swap_attack(rounds),
                                           attacks::phase_probe_attack(std::numbers::pi / 3)};
  for (const auto& a : list) {
    const auto rep = protocol::sift_equivalence_check(config(rounds, 8080), a, trials);
    r.require(rep.equivalent, a.name() + " within 4 sigma");
    r.note(a.name() + " ctrl " + fmt(rep.exact_ctrl_rate) + "/" + fmt(rep.sampled_ctrl_rate) + " (z=" +
           fmt(rep.ctrl_z) + ") test " + fmt(rep.exact_test_rate) + "/" + fmt(rep.sampled_test_rate) + " (z=" +
           fmt(rep.test_z) + ")");
  }
  return r;
}

Result engine_oracle_suite() {
  Result r;
  Rng rng(9001);
  // Partial trace against the full density matrix, every layout of up to
  // three subsystems with dims 1..4 and total dim <= 64.
  double worst_pt = 0.0;
  std::size_t layouts = 0;
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      for (std::size_t c = 1; c <= 4; ++c) {
        const std::vector<std::size_t> dims = {a, b, c};
        const std::vector<Label> labels = {reg(0), reg(1), reg(2)};
        const auto psi = random_state(SubsystemLayout(dims, labels), rng);
        for (std::size_t mask = 1; mask < 8; ++mask) {
          std::vector<std::size_t> pos;
          std::vector<Label> keep;
          for (std::size_t i = 0; i < 3; ++i) {
            if (mask & (1U << i)) {
              pos.push_back(i);
              keep.push_back(labels[i]);
            }
          }
          const auto got = partial_trace(psi, keep).entries();
          const auto want = oracle::partial_trace(psi.amps(), dims, pos);
          worst_pt = std::max(worst_pt, (got - want).cwiseAbs().maxCoeff());
        }
        ++layouts;
      }
    }
  }
  r.require(worst_pt <= 1e-9, "partial trace vs brute force <= 1e-9");

  double worst_u = 0.0, worst_norm = 0.0, worst_tr = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t d1 = 1 + rng.below(4), d2 = 1 + rng.below(4), d3 = 1 + rng.below(4);
    const auto psi = random_state(SubsystemLayout({d1, d2, d3}, {reg(0), reg(1), reg(2)}), rng);
    const auto u = random_unitary(d1 * d3, rng);
    const auto& m = u.matrix();
    worst_u = std::max(worst_u, (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm());
    const auto out = apply_unitary(psi, u, {reg(0), reg(2)});
    worst_norm = std::max(worst_norm, std::abs(out.norm() - 1.0));
    worst_tr = std::max(worst_tr, std::abs(partial_trace(out, {reg(1)}).entries().trace().real() - 1.0));
  }
  r.require(worst_u <= 1e-9, "unitarity <= 1e-9");
  r.require(worst_norm <= 1e-10, "norm within 1e-10");
  r.require(worst_tr <= 1e-9, "trace within 1e-9");

  bool same = true;
  for (auto mode : {Mode::Sampling, Mode::Exact}) {
    auto c = config(mode == Mode::Exact ? 6 : 2000, 12345);
    c.mode = mode;
    const auto attack = attacks::phase_probe_attack(1.0);
    std::ostringstream a, b;
    const auto x = protocol::simulate(c, attack);
    const auto y = protocol::simulate(c, attack);
    protocol::write_transcript(a, x.transcript);
    protocol::write_transcript(b, y.transcript);
    same = same && a.str() == b.str() && protocol::to_json(x.stats).dump() == protocol::to_json(y.stats).dump();
  }
  r.require(same, "byte-identical transcripts under a fixed seed");
  r.note(std::to_string(layouts) + " layouts, max pt error=" + fmt(worst_pt) + "; 1000 cases: unitarity=" +
         fmt(worst_u) + " norm=" + fmt(worst_norm) + " trace=" + fmt(worst_tr));
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"1 robustness baseline (identity, N=1e4)", robustness_baseline},
      {"2 counterexample final state and purity", counterexample_state},
      {"3 counterexample statistics (1e4 trials)", counterexample_statistics},
      {"4 constraint-theorem suite", constraint_theorem_suite},
      {"5 phase-probe tradeoff curve", tradeoff_curve},
      {"6 complementary attacks", complementary_attacks},
      {"7 product structure (identity, len <= 4)", product_structure},
      {"8 mode equivalence (built-in attacks)", mode_equivalence},
      {"9 engine oracle suite", engine_oracle_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Result res;
    try {
      res = run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    failed += res.pass ? 0 : 1;
    std::printf("[%s] %s :: %s\n", res.pass ? "PASS" : "FAIL", name.c_str(), res.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
