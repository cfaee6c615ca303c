// Copyright 2026 The egal Authors
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

#include "egal/report.hpp"

#include <json.hpp>

namespace egal {

namespace {

using nlohmann::json;

json witness_to_json(const Witness& w) {
  json j;
  j["n"] = w.game.player_count();
  j["worths"] = std::vector<double>(w.game.worths().begin(), w.game.worths().end());
  if (w.other) j["other"] = std::vector<double>(w.other->worths().begin(), w.other->worths().end());
  j["partition"] = w.partition.unions();
  j["subject"] = w.subject;
  j["observed"] = w.observed;
  j["expected"] = w.expected;
  j["detail"] = w.detail;
  return j;
}

Witness witness_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  Witness w{ExplicitGame(n, j.at("worths").get<std::vector<double>>()), std::nullopt,
            Partition(n, j.at("partition").get<std::vector<std::vector<PlayerId>>>()),
            j.at("subject").get<std::vector<std::size_t>>(), j.at("observed").get<double>(),
            j.at("expected").get<double>(), j.value("detail", std::string{})};
  if (j.contains("other")) w.other = ExplicitGame(n, j.at("other").get<std::vector<double>>());
  return w;
}

Outcome parse_outcome(const std::string& s) {
  if (s == "holds") return Outcome::Holds;
  if (s == "violated") return Outcome::Violated;
  if (s == "inconclusive") return Outcome::Inconclusive;
  if (s == "vacuous") return Outcome::Vacuous;
  throw ParseError("outcome", "unknown outcome '" + s + "'");
}

}  // namespace

std::string report_to_line(const CheckReport& r) {
  json j;
  j["value"] = r.value.name();
  j["axiom"] = to_string(r.axiom);
  j["outcome"] = to_string(r.outcome);
  if (r.expect) j["expect"] = to_string(*r.expect);
  j["trials"] = r.trials_run;
  j["vacuous"] = r.vacuous_trials;
  j["exhaustive"] = r.exhaustive_configs;
  j["seed"] = r.seed;
  if (!r.witness_tier.empty()) j["tier"] = r.witness_tier;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  return j.dump();
}

CheckReport report_from_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError("report", e.what());
  }
  try {
    CheckReport r(ValueSpec::parse(j.at("value").get<std::string>()),
                  parse_axiom(j.at("axiom").get<std::string>()));
    r.outcome = parse_outcome(j.at("outcome").get<std::string>());
    if (j.contains("expect")) {
      r.expect = j["expect"].get<std::string>() == "hold" ? Expectation::Hold : Expectation::Violation;
    }
    r.trials_run = j.value("trials", std::size_t{0});
    r.vacuous_trials = j.value("vacuous", std::size_t{0});
    r.exhaustive_configs = j.value("exhaustive", std::uint64_t{0});
    r.seed = j.value("seed", std::uint64_t{0});
    r.witness_tier = j.value("tier", std::string{});
    r.note = j.value("note", std::string{});
    if (j.contains("witness")) r.witness = witness_from_json(j["witness"]);
    return r;
  } catch (const json::exception& e) {
    throw ParseError("report", e.what());
  }
}

std::vector<CheckReport> read_report_stream(std::istream& in) {
  std::vector<CheckReport> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(report_from_line(line));
  }
  return out;
}

}  // namespace egal
