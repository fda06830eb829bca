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

#include "sqkd/analysis/report_json.hpp"

#include <cmath>

namespace sqkd::analysis {
namespace {

// JSON has no infinity; a failed precondition is reported as null.
nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

nlohmann::json to_json(const ConstraintReport& r) {
  return {{"round", r.round},
          {"test_residual", r.test_residual},
          {"ctrl_error_prob", r.ctrl_error_prob},
          {"f_distance", r.f_distance}};
}

nlohmann::json to_json(const LeakageReport& r) {
  return {{"pattern", r.pattern},
          {"per_bit_trace_distance", r.per_bit_trace_distance},
          {"holevo_bound", r.holevo_bound},
          {"max_leakage", r.max_leakage}};
}

nlohmann::json to_json(const TheoremVerdict& v) {
  return {{"eps", v.eps},
          {"max_residual", v.max_residual},
          {"residual_pattern", v.residual_pattern},
          {"residual_round", v.residual_round},
          {"max_leakage", v.max_leakage},
          {"leakage_pattern", v.leakage_pattern},
          {"patterns_checked", v.patterns_checked},
          {"verdict", v.pass ? "PASS" : "FAIL"}};
}

nlohmann::json to_json(const ProductStructureReport& r) {
  return {{"pattern", r.pattern},
          {"precondition_met", r.precondition_met},
          {"max_residual", r.max_residual},
          {"deviation", finite_or_null(r.deviation)},
          {"product_ok", r.product_ok},
          {"bob_purity", r.bob_purity},
          {"marginal_product_purity", r.marginal_product_purity}};
}

nlohmann::json to_json(const protocol::EquivalenceReport& r) {
  return {{"trials", r.trials},
          {"rounds", r.rounds},
          {"exact_ctrl_rate", r.exact_ctrl_rate},
          {"sampled_ctrl_rate", r.sampled_ctrl_rate},
          {"exact_test_rate", r.exact_test_rate},
          {"sampled_test_rate", r.sampled_test_rate},
          {"ctrl_z", finite_or_null(r.ctrl_z)},
          {"test_z", finite_or_null(r.test_z)},
          {"max_cell_z", finite_or_null(r.max_cell_z)},
          {"impossible_outcomes", r.impossible_outcomes},
          {"equivalent", r.equivalent}};
}

}  // namespace sqkd::analysis
