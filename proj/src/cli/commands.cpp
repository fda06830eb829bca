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

#include "sqkd/cli/commands.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sqkd/analysis/analysis.hpp"
#include "sqkd/analysis/report_json.hpp"
#include "sqkd/attacks/registry.hpp"
#include "sqkd/cli/config.hpp"
#include "sqkd/engine/error.hpp"
#include "sqkd/protocol/transcript_io.hpp"

namespace sqkd::cli {
namespace {

using nlohmann::json;

double parse_number(std::string_view s, const std::string& what) {
  std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidConfig, what + " is not a number: '" + str + "'");
  }
  if (used != str.size()) throw Error(Errc::InvalidConfig, what + " is not a number: '" + str + "'");
  return v;
}

}  // namespace

std::pair<std::string, double> parse_param(std::string_view kv) {
  const auto eq = kv.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error(Errc::InvalidConfig, "parameter must look like name=value, got '" + std::string(kv) + "'");
  }
  std::string name(kv.substr(0, eq));
  return {name, parse_number(kv.substr(eq + 1), "parameter " + name)};
}

int cmd_run(const std::filesystem::path& config, const std::filesystem::path& out, std::ostream& err) {
  try {
    auto cfg = load_run_config(config);
    if (auto seed = seed_from_env()) cfg.protocol.seed = *seed;
    const auto attack = build_attack(cfg.attack, cfg.protocol.rounds);
    const auto result = protocol::simulate(cfg.protocol, attack);

    auto transcript_path = out;
    transcript_path.replace_extension(".jsonl");
    std::ofstream stats_out(out);
    std::ofstream transcript_out(transcript_path);
    if (!stats_out || !transcript_out) throw Error(Errc::InvalidConfig, "cannot write " + out.string());
    json doc = protocol::to_json(result.stats);
    stats_out << doc.dump(2) << '\n';
    protocol::write_transcript(transcript_out, result.transcript);
    if (!stats_out || !transcript_out) throw Error(Errc::InvalidConfig, "write failed for " + out.string());
    return result.stats.aborted ? exit_code::kDetected : exit_code::kOk;
  } catch (const std::exception& e) {
    err << "sqkd run: " << e.what() << '\n';
    return exit_code::kError;
  }
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto attack = build_attack({opts.attack, opts.params}, opts.max_pattern_len);
    json constraints = json::array();
    for (std::size_t r = 0; r < opts.max_pattern_len; ++r) {
      constraints.push_back(analysis::to_json(analysis::constraint_check(attack, r)));
    }
    const auto patterns = analysis::default_patterns(opts.max_pattern_len);
    const auto verdict = analysis::theorem_check(attack, patterns, opts.eps);
    json doc = {{"attack", attack.name()},
                {"params", attack.params()},
                {"eps", opts.eps},
                {"max_pattern_len", opts.max_pattern_len},
                {"constraints", constraints},
                {"theorem", analysis::to_json(verdict)},
                {"verdict", verdict.pass ? "PASS" : "FAIL"}};
    out << doc.dump(2) << '\n';
    return verdict.pass ? exit_code::kOk : exit_code::kTheoremFail;
  } catch (const std::exception& e) {
    err << "sqkd check: " << e.what() << '\n';
    return exit_code::kError;
  }
}

std::vector<double> expand_grid(std::string_view grid) {
  const auto a = grid.find(':');
  const auto b = a == std::string_view::npos ? a : grid.find(':', a + 1);
  if (b == std::string_view::npos || grid.find(':', b + 1) != std::string_view::npos) {
    throw Error(Errc::InvalidConfig, "grid must be start:stop:step, got '" + std::string(grid) + "'");
  }
  const double start = parse_number(grid.substr(0, a), "grid start");
  const double stop = parse_number(grid.substr(a + 1, b - a - 1), "grid stop");
  const double step = parse_number(grid.substr(b + 1), "grid step");
  if (start == stop) return {start};
  if (step == 0.0 || (stop - start) / step < 0.0) {
    throw Error(Errc::EmptyGrid, "grid '" + std::string(grid) + "' has no points");
  }
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = start + static_cast<double>(k) * step;
  return values;
}

std::vector<ScanRow> scan(const std::string& attack, const std::string& param, const std::vector<double>& values,
                          const std::map<std::string, double>& fixed) {
  const attacks::AttackInfo* info = nullptr;
  try {
    info = &attacks::attack_info(attack);
  } catch (const Error&) {
    throw Error(Errc::UnknownFamily, attack);
  }
  if (std::find(info->scannable.begin(), info->scannable.end(), param) == info->scannable.end()) {
    throw Error(Errc::UnknownFamily, attack + " cannot be scanned over '" + param + "'");
  }
  if (values.empty()) throw Error(Errc::EmptyGrid, "no grid points");

  // Built up front so parameter errors surface outside the parallel region.
  std::vector<attacks::AttackSpec> specs;
  specs.reserve(values.size());
  for (double v : values) {
    auto params = fixed;
    params[param] = v;
    specs.push_back(attacks::make_attack(attack, params, 1));
  }

  std::vector<ScanRow> rows(values.size());
  const auto n = static_cast<std::int64_t>(values.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto c = analysis::constraint_check(specs[i], 0);
    const auto l = analysis::eve_leakage(specs[i], "S");
    rows[i] = {values[i], c.ctrl_error_prob, c.test_residual, l.max_leakage, l.holevo_bound};
  }
  return rows;
}

void write_scan_csv(std::ostream& out, const std::string& param, const std::vector<ScanRow>& rows) {
  out << param << ",ctrl_error,test_error,trace_distance,holevo\n";
  out << std::setprecision(15);
  for (const auto& r : rows) {
    out << r.param << ',' << r.ctrl_error << ',' << r.test_error << ',' << r.trace_distance << ',' << r.holevo << '\n';
  }
}

int cmd_scan(const ScanOptions& opts, std::ostream& err) {
  try {
    const auto rows = scan(opts.attack, opts.param, expand_grid(opts.grid), opts.fixed_params);
    std::ofstream out(opts.out);
    if (!out) throw Error(Errc::InvalidConfig, "cannot write " + opts.out.string());
    write_scan_csv(out, opts.param, rows);
    return out ? exit_code::kOk : exit_code::kError;
  } catch (const std::exception& e) {
    err << "sqkd scan: " << e.what() << '\n';
    return exit_code::kError;
  }
}

int cmd_attacks(std::ostream& out) {
  for (const auto& info : attacks::registered_attacks()) {
    out << info.name;
    for (const auto& [key, value] : info.params) {
      out << ' ' << key << '=';
      if (std::isnan(value)) {
        out << "<required>";
      } else {
        out << value;
      }
    }
    out << "  # " << info.summary << '\n';
  }
  return exit_code::kOk;
}

}  // namespace sqkd::cli
