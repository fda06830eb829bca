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

#include "sqkd/cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include "sqkd/attacks/registry.hpp"
#include "sqkd/engine/error.hpp"
#include "sqkd/protocol/transcript_io.hpp"

namespace sqkd::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  if (!obj.is_object()) throw Error(Errc::InvalidConfig, where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (!known.contains(key)) throw Error(Errc::InvalidConfig, "unknown key '" + key + "' in " + where);
  }
}

AttackChoice parse_attack(const json& j) {
  reject_unknown(j, {"name", "params", "rounds"}, "attack");
  AttackChoice a;
  try {
    if (j.contains("name")) a.name = j.at("name").get<std::string>();
    attacks::attack_info(a.name);
    if (j.contains("params")) {
      const auto& p = j.at("params");
      if (!p.is_object()) throw Error(Errc::InvalidConfig, "attack.params must be an object");
      for (const auto& [key, value] : p.items()) {
        if (!value.is_number()) throw Error(Errc::InvalidConfig, "attack parameter '" + key + "' must be a number");
        a.params[key] = value.get<double>();
      }
    }
    if (j.contains("rounds")) {
      if (a.name != "cnot_parity") throw Error(Errc::InvalidConfig, "attack.rounds only applies to cnot_parity");
      const auto r = j.at("rounds").get<std::vector<std::int64_t>>();
      if (r.size() != 2) throw Error(Errc::InvalidConfig, "attack.rounds must list exactly two rounds");
      a.params["round_a"] = static_cast<double>(r[0]);
      a.params["round_b"] = static_cast<double>(r[1]);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidConfig, e.what());
  }
  return a;
}

}  // namespace

RunConfigFile parse_run_config(const json& doc) {
  reject_unknown(doc, {"rounds", "ctrl_prob", "test_fraction", "seed", "mode", "abort_threshold", "attack"}, "config");
  RunConfigFile cfg;
  json proto = doc;
  proto.erase("attack");
  cfg.protocol = protocol::config_from_json(proto);
  if (doc.contains("attack")) cfg.attack = parse_attack(doc.at("attack"));
  return cfg;
}

RunConfigFile load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
  return parse_run_config(doc);
}

std::optional<std::uint64_t> seed_from_env() {
  const char* v = std::getenv("SQKD_SEED");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const auto seed = std::strtoull(v, &end, 10);
  if (errno != 0 || *end != '\0' || *v == '-') {
    throw Error(Errc::InvalidConfig, std::string("SQKD_SEED is not an unsigned integer: ") + v);
  }
  return seed;
}

attacks::AttackSpec build_attack(const AttackChoice& choice, std::size_t rounds) {
  return attacks::make_attack(choice.name, choice.params, rounds);
}

}  // namespace sqkd::cli
