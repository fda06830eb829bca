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

#include <iosfwd>

#include <json.hpp>

#include "sqkd/protocol/protocol.hpp"

namespace sqkd::protocol {

// Transcript as JSON Lines: a header object {"config": {...}} followed by one
// object per round with exactly the keys index, choice, alice_bit, role,
// bob_x_outcome, bob_z_outcome, error (absent values are null). The exact
// final state is not serialized.
void write_transcript(std::ostream& out, const Transcript& transcript);
// Throws Errc::ParseError.
Transcript read_transcript(std::istream& in);

nlohmann::json to_json(const ProtocolConfig& config);
// Strict: unknown keys are rejected (Errc::InvalidConfig); missing keys keep
// their defaults.
ProtocolConfig config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RoundRecord& record);
RoundRecord record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RunStats& stats);
RunStats stats_from_json(const nlohmann::json& j);

}  // namespace sqkd::protocol
