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

#include <json.hpp>

#include "sqkd/analysis/analysis.hpp"
#include "sqkd/protocol/equivalence.hpp"

namespace sqkd::analysis {

// Field names match the report struct members.
nlohmann::json to_json(const ConstraintReport& r);
nlohmann::json to_json(const LeakageReport& r);
nlohmann::json to_json(const TheoremVerdict& v);
nlohmann::json to_json(const ProductStructureReport& r);
nlohmann::json to_json(const protocol::EquivalenceReport& r);

}  // namespace sqkd::analysis
