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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "sqkd/attacks/library.hpp"
#include "sqkd/attacks/registry.hpp"
#include "sqkd/engine/error.hpp"
#include "sqkd/engine/ops.hpp"
#include "sqkd/engine/rng.hpp"

using namespace sqkd;
using namespace sqkd::attacks;

namespace {

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::InvalidConfig;
}

double unitarity_defect(const Unitary& u) {
  const auto& m = u.matrix();
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
}

void expect_steps_unitary(const AttackSpec& a, std::size_t rounds) {
  for (std::size_t r = 0; r < rounds; ++r) {
    for (const auto* step : {a.forward(r), a.backward(r)}) {
      if (!step) continue;
      EXPECT_LT(unitarity_defect(step->unitary), 1e-9);
      EXPECT_NE(std::find(step->targets.begin(), step->targets.end(), transit()), step->targets.end());
    }
  }
  EXPECT_NEAR(a.probe_init().norm(), 1.0, 1e-10);
}

}  // namespace

TEST(attacks, identity_is_trivial) {
  const auto a = identity_attack();
  EXPECT_EQ(a.name(), "identity");
  EXPECT_EQ(a.probe_init().dim(), 1u);
  for (std::size_t r = 0; r < 10; ++r) {
    EXPECT_EQ(a.forward(r), nullptr);
    EXPECT_EQ(a.backward(r), nullptr);
  }
}

TEST(attacks, cnot_parity_layout) {
  const auto a = cnot_parity_attack(0, 2);
  EXPECT_EQ(a.probe_dims(), std::vector<std::size_t>{2});
  ASSERT_NE(a.forward(0), nullptr);
  EXPECT_EQ(a.forward(1), nullptr);
  ASSERT_NE(a.forward(2), nullptr);
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(a.backward(r), nullptr);
  EXPECT_EQ(a.forward(0)->targets, (std::vector<Label>{transit(), eve_probe(0)}));
  expect_steps_unitary(a, 4);
  EXPECT_EQ(code_of([] { (void)cnot_parity_attack(1, 1); }), Errc::DuplicateRound);
}

TEST(attacks, cnot_parity_probe_keeps_parity) {
  // Two CTRL rounds: the probe ends in |b0 xor b1> for Z-basis Bob values.
  const auto a = cnot_parity_attack(0, 1);
  for (std::size_t b0 = 0; b0 < 2; ++b0) {
    for (std::size_t b1 = 0; b1 < 2; ++b1) {
      auto psi = tensor(tensor(StateVector::basis(bob_memory(0), 2, b0), StateVector::basis(bob_memory(1), 2, b1)),
                        a.probe_init());
      psi = apply_unitary(psi, a.forward(0)->unitary, {bob_memory(0), eve_probe(0)});
      psi = apply_unitary(psi, a.forward(1)->unitary, {bob_memory(1), eve_probe(0)});
      EXPECT_NEAR(outcome_probability(psi, eve_probe(0), (b0 ^ b1) ? Outcome::One : Outcome::Zero), 1.0, 1e-12);
    }
  }
}

TEST(attacks, measure_resend_and_swap_layouts) {
  const auto m = measure_resend_z_attack(3);
  EXPECT_EQ(m.probe_dims(), (std::vector<std::size_t>{2, 2, 2}));
  for (std::size_t r = 0; r < 3; ++r) {
    ASSERT_NE(m.forward(r), nullptr);
    EXPECT_EQ(m.forward(r)->targets, (std::vector<Label>{transit(), eve_probe(static_cast<std::uint32_t>(r))}));
    EXPECT_EQ(m.backward(r), nullptr);
    EXPECT_EQ(m.last_use(r), r);
  }
  expect_steps_unitary(m, 3);

  const auto s = swap_attack(2);
  EXPECT_EQ(s.probe_dims(), (std::vector<std::size_t>{2, 2}));
  for (std::size_t r = 0; r < 2; ++r) {
    ASSERT_NE(s.forward(r), nullptr);
    ASSERT_NE(s.backward(r), nullptr);
  }
  EXPECT_NEAR(std::abs(s.probe_init()[0] - 0.5), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(partial_trace(s.probe_init(), {eve_probe(1)}).entries()(0, 1) - 0.5), 0.0, 1e-12);
  expect_steps_unitary(s, 2);
}

TEST(attacks, phase_probe_rotation) {
  const double theta = 0.7;
  const auto a = phase_probe_attack(theta);
  EXPECT_EQ(a.params().at("theta"), theta);
  ASSERT_NE(a.forward(0), nullptr);
  ASSERT_NE(a.forward(123), nullptr);
  EXPECT_EQ(a.backward(5), nullptr);
  EXPECT_EQ(a.last_use(0), AttackSpec::kForever);
  // |1>_T|0>_E -> |1>_T (cos|0> + sin|1>)_E; |0>_T untouched.
  const auto& m = a.forward(0)->unitary.matrix();
  EXPECT_NEAR(std::abs(m(2, 2) - std::cos(theta)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(3, 2) - std::sin(theta)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 1) - 1.0), 0.0, 1e-15);
  expect_steps_unitary(a, 3);

  EXPECT_EQ(code_of([] { (void)phase_probe_attack(-0.1); }), Errc::ParamOutOfRange);
  EXPECT_EQ(code_of([] { (void)phase_probe_attack(std::numbers::pi + 0.1); }), Errc::ParamOutOfRange);
  EXPECT_NO_THROW((void)phase_probe_attack(std::numbers::pi));
}

TEST(attacks, random_decoupled_are_valid) {
  Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_decoupled_attack(6, rng);
    expect_steps_unitary(a, 6);
    EXPECT_GE(a.probe_init().dim(), 1u);
    EXPECT_LE(a.probe_init().dim(), 3u);
  }
}

TEST(attacks, construction_rejects_bad_layouts) {
  AttackSpec::Schedule fwd;
  fwd.per_round.emplace(0, AttackStep{Unitary::cnot(), {eve_probe(0), eve_probe(1)}});
  EXPECT_EQ(code_of([&] {
              (void)AttackSpec("x", {}, {StateVector::basis(eve_probe(0), 2, 0), StateVector::basis(eve_probe(1), 2, 0)},
                               fwd, {});
            }),
            Errc::AttackLayoutMismatch);

  AttackSpec::Schedule unknown;
  unknown.constant = AttackStep{Unitary::cnot(), {transit(), eve_probe(4)}};
  EXPECT_EQ(code_of([&] { (void)AttackSpec("x", {}, {StateVector::basis(eve_probe(0), 2, 0)}, unknown, {}); }),
            Errc::AttackLayoutMismatch);

  AttackSpec::Schedule wrong_dim;
  wrong_dim.constant = AttackStep{Unitary::cnot(), {transit(), eve_probe(0)}};
  EXPECT_EQ(code_of([&] { (void)AttackSpec("x", {}, {StateVector::basis(eve_probe(0), 3, 0)}, wrong_dim, {}); }),
            Errc::AttackLayoutMismatch);

  EXPECT_EQ(code_of([&] { (void)AttackSpec("x", {}, {StateVector::basis(reg(0), 2, 0)}, {}, {}); }),
            Errc::AttackLayoutMismatch);
}

TEST(registry, names_and_params) {
  std::vector<std::string> names;
  for (const auto& info : registered_attacks()) names.push_back(info.name);
  EXPECT_EQ(names, (std::vector<std::string>{"identity", "cnot_parity", "measure_resend_z", "swap", "phase_probe"}));
  EXPECT_EQ(make_attack("phase_probe", {{"theta", 0.2}}, 4).params().at("theta"), 0.2);
  EXPECT_EQ(make_attack("measure_resend_z", {}, 4).probe_dims().size(), 4u);
  const auto c = make_attack("cnot_parity", {{"round_a", 1}, {"round_b", 3}}, 4);
  EXPECT_EQ(c.forward(0), nullptr);
  EXPECT_NE(c.forward(1), nullptr);
  EXPECT_NE(c.forward(3), nullptr);

  EXPECT_EQ(code_of([] { (void)attack_info("nope"); }), Errc::UnknownAttack);
  EXPECT_EQ(code_of([] { (void)make_attack("phase_probe", {}, 1); }), Errc::InvalidConfig);
  EXPECT_EQ(code_of([] { (void)make_attack("identity", {{"theta", 1.0}}, 1); }), Errc::InvalidConfig);
}
