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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqkd::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kDetected = 2;
inline constexpr int kTheoremFail = 3;
}  // namespace exit_code

// Simulates one run; writes RunStats JSON to `out` and the transcript to the
// same stem with a .jsonl extension. 0 = clean, 2 = aborted (Eve detected),
// 1 = error (message on `err`).
int cmd_run(const std::filesystem::path& config, const std::filesystem::path& out, std::ostream& err);

struct CheckOptions {
  std::string attack;
  std::map<std::string, double> params;
  double eps = 1e-9;
  std::size_t max_pattern_len = 6;
};

// Constraint reports for every round (all earlier rounds CTRL) and the
// theorem check over default_patterns(max_pattern_len), printed as JSON on
// `out`. 0 = PASS, 3 = FAIL, 1 = error.
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);

struct ScanOptions {
  std::string attack;
  std::string param;
  std::string grid;  // start:stop:step
  std::filesystem::path out;
  std::map<std::string, double> fixed_params;
};

struct ScanRow {
  double param = 0.0;
  double ctrl_error = 0.0;
  double test_error = 0.0;
  double trace_distance = 0.0;
  double holevo = 0.0;
};

// Inclusive arithmetic grid; a negative step gives a descending grid.
// Throws Errc::EmptyGrid, Errc::InvalidConfig.
std::vector<double> expand_grid(std::string_view grid);

// One-round exact figures per grid value: CTRL error and TEST residual of
// round 0, Eve's trace distance and Holevo quantity for a single SIFT round.
// Throws Errc::UnknownFamily when the attack cannot sweep `param`.
std::vector<ScanRow> scan(const std::string& attack, const std::string& param, const std::vector<double>& values,
                          const std::map<std::string, double>& fixed = {});
void write_scan_csv(std::ostream& out, const std::string& param, const std::vector<ScanRow>& rows);

int cmd_scan(const ScanOptions& opts, std::ostream& err);

int cmd_attacks(std::ostream& out);

// "name=value" -> (name, value). Throws Errc::InvalidConfig.
std::pair<std::string, double> parse_param(std::string_view kv);

}  // namespace sqkd::cli
