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

// Command-line front end: run, check, scan, attacks.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqkd/cli/commands.hpp"

namespace {

bool collect_params(const std::vector<std::string>& raw, std::map<std::string, double>& out) {
  try {
    for (const auto& kv : raw) out.insert(sqkd::cli::parse_param(kv));
  } catch (const std::exception& e) {
    std::cerr << "sqkd: " << e.what() << '\n';
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and robustness checker for QKD with classical Alice"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  auto* run = app.add_subcommand("run", "Simulate a protocol run from a JSON config");
  run->add_option("--config", config_path, "Run config (JSON)")->required();
  run->add_option("--out", out_path, "RunStats JSON output; the transcript goes next to it as .jsonl")->required();

  sqkd::cli::CheckOptions check_opts;
  std::vector<std::string> check_params;
  auto* check = app.add_subcommand("check", "Constraint residuals and the zero-error => zero-leakage check");
  check->add_option("--attack", check_opts.attack, "Registered attack name")->required();
  check->add_option("--param", check_params, "Attack parameter name=value (repeatable)");
  check->add_option("--eps", check_opts.eps, "Residual tolerance");
  check->add_option("--max-pattern-len", check_opts.max_pattern_len, "Longest choice pattern to enumerate");

  sqkd::cli::ScanOptions scan_opts;
  std::vector<std::string> scan_params;
  auto* scan = app.add_subcommand("scan", "Sweep one attack parameter and write CSV");
  scan->add_option("--attack", scan_opts.attack, "Attack family")->required();
  scan->add_option("--param", scan_opts.param, "Parameter to sweep")->required();
  scan->add_option("--grid", scan_opts.grid, "start:stop:step (inclusive)")->required();
  scan->add_option("--out", scan_opts.out, "CSV output path")->required();
  scan->add_option("--fixed", scan_params, "Other attack parameters name=value (repeatable)");

  auto* list = app.add_subcommand("attacks", "List registered attacks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sqkd::cli::exit_code::kError;
  }

  if (run->parsed()) return sqkd::cli::cmd_run(config_path, out_path, std::cerr);
  if (check->parsed()) {
    if (!collect_params(check_params, check_opts.params)) return sqkd::cli::exit_code::kError;
    return sqkd::cli::cmd_check(check_opts, std::cout, std::cerr);
  }
  if (scan->parsed()) {
    if (!collect_params(scan_params, scan_opts.fixed_params)) return sqkd::cli::exit_code::kError;
    return sqkd::cli::cmd_scan(scan_opts, std::cerr);
  }
  if (list->parsed()) return sqkd::cli::cmd_attacks(std::cout);
  return sqkd::cli::exit_code::kError;
}
