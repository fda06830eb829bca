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

#include "sqkd/protocol/transcript_io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "sqkd/engine/error.hpp"

namespace sqkd::protocol {
namespace {

using nlohmann::json;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

Mode mode_from(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "sampling") return Mode::Sampling;
  throw Error(Errc::InvalidConfig, "mode must be \"exact\" or \"sampling\", got \"" + s + "\"");
}

Choice choice_from(const std::string& s) {
  if (s == "CTRL") return Choice::Ctrl;
  if (s == "SIFT") return Choice::Sift;
  throw Error(Errc::ParseError, "bad choice \"" + s + "\"");
}

RoundRole role_from(const std::string& s) {
  if (s == "Ctrl") return RoundRole::Ctrl;
  if (s == "Test") return RoundRole::Test;
  if (s == "Key") return RoundRole::Key;
  if (s == "Unassigned") return RoundRole::Unassigned;
  throw Error(Errc::ParseError, "bad role \"" + s + "\"");
}

XOutcome x_from(const std::string& s) {
  if (s == "plus") return XOutcome::Plus;
  if (s == "minus") return XOutcome::Minus;
  throw Error(Errc::ParseError, "bad X outcome \"" + s + "\"");
}

}  // namespace

json to_json(const ProtocolConfig& c) {
  return {{"rounds", c.rounds},
          {"ctrl_prob", c.ctrl_prob},
          {"test_fraction", c.test_fraction},
          {"seed", c.seed},
          {"mode", std::string(to_string(c.mode))},
          {"abort_threshold", c.abort_threshold},
          {"exact_round_cap", c.exact_round_cap}};
}

ProtocolConfig config_from_json(const json& j) {
  static const std::set<std::string> known = {"rounds", "ctrl_prob", "test_fraction", "seed",
                                              "mode", "abort_threshold", "exact_round_cap"};
  if (!j.is_object()) throw Error(Errc::InvalidConfig, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw Error(Errc::InvalidConfig, "unknown config key '" + key + "'");
  }
  ProtocolConfig c;
  try {
    if (j.contains("rounds")) {
      const auto r = j.at("rounds").get<std::int64_t>();
      if (r < 1) throw Error(Errc::InvalidConfig, "rounds must be >= 1");
      c.rounds = static_cast<std::size_t>(r);
    }
    if (j.contains("ctrl_prob")) c.ctrl_prob = j.at("ctrl_prob").get<double>();
    if (j.contains("test_fraction")) c.test_fraction = j.at("test_fraction").get<double>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("mode")) c.mode = mode_from(j.at("mode").get<std::string>());
    if (j.contains("abort_threshold")) c.abort_threshold = j.at("abort_threshold").get<double>();
    if (j.contains("exact_round_cap")) c.exact_round_cap = j.at("exact_round_cap").get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidConfig, e.what());
  }
  return c;
}

json to_json(const RoundRecord& r) {
  json x = opt(r.bob_x_outcome ? std::optional<std::string>(std::string(to_string(*r.bob_x_outcome))) : std::nullopt);
  return {{"index", r.index},
          {"choice", std::string(to_string(r.choice))},
          {"alice_bit", opt(r.alice_bit)},
          {"role", std::string(to_string(r.role))},
          {"bob_x_outcome", x},
          {"bob_z_outcome", opt(r.bob_z_outcome)},
          {"error", opt(r.error)}};
}

RoundRecord record_from_json(const json& j) {
  RoundRecord r;
  try {
    if (j.size() != 7) throw Error(Errc::ParseError, "round record must have exactly 7 fields");
    r.index = j.at("index").get<std::size_t>();
    r.choice = choice_from(j.at("choice").get<std::string>());
    r.alice_bit = opt_from<int>(j, "alice_bit");
    r.role = role_from(j.at("role").get<std::string>());
    if (auto x = opt_from<std::string>(j, "bob_x_outcome")) r.bob_x_outcome = x_from(*x);
    r.bob_z_outcome = opt_from<int>(j, "bob_z_outcome");
    r.error = opt_from<bool>(j, "error");
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return r;
}

json to_json(const RunStats& s) {
  return {{"n_ctrl", s.n_ctrl},
          {"n_test", s.n_test},
          {"n_key", s.n_key},
          {"ctrl_errors", s.ctrl_errors},
          {"test_errors", s.test_errors},
          {"ctrl_error_rate", s.ctrl_error_rate},
          {"test_error_rate", s.test_error_rate},
          {"key_alice", s.key_alice},
          {"key_bob", s.key_bob},
          {"key_mismatch_rate", s.key_mismatch_rate},
          {"aborted", s.aborted}};
}

RunStats stats_from_json(const json& j) {
  RunStats s;
  try {
    s.n_ctrl = j.at("n_ctrl").get<std::size_t>();
    s.n_test = j.at("n_test").get<std::size_t>();
    s.n_key = j.at("n_key").get<std::size_t>();
    s.ctrl_errors = j.at("ctrl_errors").get<std::size_t>();
    s.test_errors = j.at("test_errors").get<std::size_t>();
    s.ctrl_error_rate = j.at("ctrl_error_rate").get<double>();
    s.test_error_rate = j.at("test_error_rate").get<double>();
    s.key_alice = j.at("key_alice").get<std::string>();
    s.key_bob = j.at("key_bob").get<std::string>();
    s.key_mismatch_rate = j.at("key_mismatch_rate").get<double>();
    s.aborted = j.at("aborted").get<bool>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return s;
}

void write_transcript(std::ostream& out, const Transcript& t) {
  out << json{{"config", to_json(t.config)}}.dump() << '\n';
  for (const auto& r : t.records) out << to_json(r).dump() << '\n';
}

Transcript read_transcript(std::istream& in) {
  Transcript t;
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, "empty transcript");
  try {
    t.config = config_from_json(json::parse(line).at("config"));
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      t.records.push_back(record_from_json(json::parse(line)));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return t;
}

}  // namespace sqkd::protocol
