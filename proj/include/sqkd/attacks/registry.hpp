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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sqkd/attacks/attack_spec.hpp"

namespace sqkd::attacks {

struct AttackInfo {
  std::string name;
  std::string summary;
  // Accepted numeric parameters with their defaults (NaN = required).
  std::map<std::string, double> params;
  // Parameters a scan may sweep.
  std::vector<std::string> scannable;
};

// identity, cnot_parity, measure_resend_z, swap, phase_probe.
const std::vector<AttackInfo>& registered_attacks();
const AttackInfo& attack_info(std::string_view name);  // Errc::UnknownAttack

// Builds a registered attack. `rounds` sizes the per-round probe registers of
// measure_resend_z and swap. Throws Errc::UnknownAttack for unregistered names,
// Errc::InvalidConfig for unknown or missing parameters.
AttackSpec make_attack(std::string_view name, const std::map<std::string, double>& params, std::size_t rounds);

}  // namespace sqkd::attacks
