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

#include "sqkd/attacks/registry.hpp"

#include <cmath>
#include <limits>

#include "sqkd/attacks/library.hpp"
#include "sqkd/engine/error.hpp"

namespace sqkd::attacks {
namespace {

constexpr double kRequired = std::numeric_limits<double>::quiet_NaN();

std::size_t as_round(double v, const std::string& key) {
  if (!(v >= 0.0) || v != std::floor(v)) {
    throw Error(Errc::ParamOutOfRange, key + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

const std::vector<AttackInfo>& registered_attacks() {
  static const std::vector<AttackInfo> infos = {
      {"identity", "Eve does nothing", {}, {}},
      {"cnot_parity", "probe records the parity of two rounds via CNOTs", {{"round_a", 0.0}, {"round_b", 1.0}}, {}},
      {"measure_resend_z", "Z-basis intercept-resend (coherent CNOT copy per round)", {}, {}},
      {"swap", "swap transit with a fresh |+> probe on both legs", {}, {}},
      {"phase_probe", "controlled rotation of a shared probe qubit", {{"theta", kRequired}}, {"theta"}},
  };
  return infos;
}

const AttackInfo& attack_info(std::string_view name) {
  for (const auto& info : registered_attacks()) {
    if (info.name == name) return info;
  }
  throw Error(Errc::UnknownAttack, std::string(name));
}

AttackSpec make_attack(std::string_view name, const std::map<std::string, double>& params, std::size_t rounds) {
  const auto& info = attack_info(name);
  std::map<std::string, double> resolved = info.params;
  for (const auto& [key, value] : params) {
    if (!info.params.contains(key)) {
      throw Error(Errc::InvalidConfig, "attack " + info.name + " has no parameter '" + key + "'");
    }
    resolved[key] = value;
  }
  for (const auto& [key, value] : resolved) {
    if (std::isnan(value)) throw Error(Errc::InvalidConfig, "attack " + info.name + " requires parameter '" + key + "'");
  }

  if (name == "identity") return identity_attack();
  if (name == "cnot_parity") {
    return cnot_parity_attack(as_round(resolved["round_a"], "round_a"), as_round(resolved["round_b"], "round_b"));
  }
  if (name == "measure_resend_z") return measure_resend_z_attack(rounds);
  if (name == "swap") return swap_attack(rounds);
  return phase_probe_attack(resolved["theta"]);
}

}  // namespace sqkd::attacks
