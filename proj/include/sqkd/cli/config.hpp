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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "sqkd/attacks/attack_spec.hpp"
#include "sqkd/protocol/protocol.hpp"

namespace sqkd::cli {

struct AttackChoice {
  std::string name = "identity";
  std::map<std::string, double> params;
};

// The `run` config document:
//   {"rounds": int, "ctrl_prob": real, "test_fraction": real, "seed": uint,
//    "mode": "exact"|"sampling", "abort_threshold": real,
//    "attack": {"name": str, "params": {str: number}, "rounds": [int, int]}}
// Every key is optional; unknown keys are rejected.
struct RunConfigFile {
  protocol::ProtocolConfig protocol;
  AttackChoice attack;
};

// Throws Errc::InvalidConfig (bad keys or values), Errc::UnknownAttack.
RunConfigFile parse_run_config(const nlohmann::json& doc);
// Adds Errc::ParseError for unreadable files or malformed JSON.
RunConfigFile load_run_config(const std::filesystem::path& path);

// SQKD_SEED, when set. Throws Errc::InvalidConfig if it is not an unsigned integer.
std::optional<std::uint64_t> seed_from_env();

attacks::AttackSpec build_attack(const AttackChoice& choice, std::size_t rounds);

}  // namespace sqkd::cli
