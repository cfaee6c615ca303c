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

#include "egal/io.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace egal {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("{} (byte {})", what, e.byte), e.what());
  }
}

void reject_unknown_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!known) throw ParseError(where.empty() ? key : where + "." + key, "unknown field");
  }
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(where, "expected a finite number");
  return x;
}

std::vector<double> numbers_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number_at(j[i], fmt::format("{}[{}]", where, i)));
  return out;
}

struct Players {
  std::size_t n = 0;
  std::vector<std::string> labels;

  PlayerId resolve(const json& member, const std::string& where) const {
    if (member.is_number_integer()) {
      const auto id = member.get<long long>();
      if (id < 0 || static_cast<std::size_t>(id) >= n) {
        throw ParseError(where, fmt::format("player {} out of range 0..{}", id, n - 1));
      }
      return static_cast<PlayerId>(id);
    }
    if (member.is_string()) {
      const auto it = std::find(labels.begin(), labels.end(), member.get<std::string>());
      if (it == labels.end()) throw ParseError(where, fmt::format("unknown player '{}'", member.get<std::string>()));
      return static_cast<PlayerId>(it - labels.begin());
    }
    throw ParseError(where, "a member must be a player index or label");
  }

  std::vector<PlayerId> resolve_all(const json& members, const std::string& where) const {
    if (!members.is_array()) throw ParseError(where, "expected an array of players");
    std::vector<PlayerId> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
      out.push_back(resolve(members[i], fmt::format("{}[{}]", where, i)));
    }
    std::vector<PlayerId> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(where, "a player is listed twice");
    }
    return out;
  }
};

Players parse_players(const json& doc) {
  if (!doc.contains("players")) throw ParseError("players", "missing field");
  const json& p = doc["players"];
  Players out;
  if (p.is_number_integer()) {
    const auto n = p.get<long long>();
    if (n < 1) throw ParseError("players", "need at least one player");
    out.n = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < out.n; ++i) out.labels.push_back(std::to_string(i));
  } else if (p.is_array()) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!p[i].is_string()) throw ParseError(fmt::format("players[{}]", i), "expected a label");
      const std::string label = p[i].get<std::string>();
      if (!seen.insert(label).second) throw ParseError(fmt::format("players[{}]", i), "duplicate label");
      out.labels.push_back(label);
    }
    out.n = out.labels.size();
    if (out.n == 0) throw ParseError("players", "need at least one player");
  } else {
    throw ParseError("players", "expected a count or a list of labels");
  }
  return out;
}

Partition parse_partition(const json& j, const Players& players) {
  if (!j.is_array()) throw ParseError("partition", "expected a list of unions");
  std::vector<std::vector<PlayerId>> unions;
  for (std::size_t k = 0; k < j.size(); ++k) unions.push_back(players.resolve_all(j[k], fmt::format("partition[{}]", k)));
  try {
    return Partition(players.n, std::move(unions));
  } catch (const PartitionMismatch& e) {
    throw ParseError("partition", e.what());
  }
}

json table_to_json(const OutputTable& t) {
  json j;
  j["title"] = t.title;
  j["keyHeaders"] = t.key_headers;
  j["rows"] = t.keys;
  json cols = json::array();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    cols.push_back({{"name", t.columns[c]}, {"values", t.values[c]}, {"total", t.column_total(c)}});
  }
  j["columns"] = cols;
  j["notes"] = t.notes;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Game files -----------------------------------------------------------------

GameFile parse_game_file(const std::string& text) {
  const json doc = parse_json(text, "game file");
  if (!doc.is_object()) throw ParseError("", "a game file must be a JSON object");
  reject_unknown_keys(doc, "", {"name", "description", "players", "coalitions", "partition", "singletons",
                                "unionWorths", "total"});
  const Players players = parse_players(doc);

  const bool has_summary = doc.contains("singletons") || doc.contains("unionWorths") || doc.contains("total");
  const bool has_coalitions = doc.contains("coalitions");
  if (has_summary && has_coalitions) {
    throw ParseError("", "use either 'coalitions' (explicit form) or 'singletons'/'unionWorths'/'total' (summary form)");
  }

  GameFile out{players.labels, std::nullopt,
               GameSummary{{}, Partition::singletons(players.n), {}, 0.0}};

  if (has_coalitions) {
    if (players.n > kMaxExplicitPlayers) {
      throw ParseError("players", fmt::format("explicit games are limited to {} players", kMaxExplicitPlayers));
    }
    const json& list = doc["coalitions"];
    if (!list.is_array()) throw ParseError("coalitions", "expected a list of {members, value}");
    std::vector<double> worths(std::size_t{1} << players.n, 0.0);
    std::vector<bool> listed(worths.size(), false);
    for (std::size_t c = 0; c < list.size(); ++c) {
      const std::string where = fmt::format("coalitions[{}]", c);
      const json& entry = list[c];
      if (!entry.is_object()) throw ParseError(where, "expected an object");
      reject_unknown_keys(entry, where, {"members", "value"});
      if (!entry.contains("members")) throw ParseError(where + ".members", "missing field");
      if (!entry.contains("value")) throw ParseError(where + ".value", "missing field");
      const auto members = players.resolve_all(entry["members"], where + ".members");
      if (members.empty()) throw ParseError(where + ".members", "the empty coalition must not be listed");
      const Coalition s = Coalition::of(std::span<const PlayerId>(members));
      if (listed[s.bits()]) throw ParseError(where, fmt::format("coalition {} listed twice", s.to_string()));
      listed[s.bits()] = true;
      worths[s.bits()] = number_at(entry["value"], where + ".value");
    }
    if (!listed.back()) throw ParseError("coalitions", "the grand coalition must be listed");
    out.game = ExplicitGame(players.n, std::move(worths));
    if (doc.contains("partition")) out.summary.partition = parse_partition(doc["partition"], players);
    out.summary = summary_from_explicit(*out.game, out.summary.partition);
    return out;
  }

  for (const char* key : {"singletons", "partition", "unionWorths", "total"}) {
    if (!doc.contains(key)) throw ParseError(key, "missing field (summary form needs singletons, partition, unionWorths, total)");
  }
  out.summary.partition = parse_partition(doc["partition"], players);
  out.summary.singleton = numbers_at(doc["singletons"], "singletons");
  out.summary.union_worth = numbers_at(doc["unionWorths"], "unionWorths");
  out.summary.total = number_at(doc["total"], "total");
  if (out.summary.singleton.size() != players.n) {
    throw ParseError("singletons", fmt::format("expected {} entries, got {}", players.n, out.summary.singleton.size()));
  }
  if (out.summary.union_worth.size() != out.summary.partition.union_count()) {
    throw ParseError("unionWorths", fmt::format("expected {} entries, got {}", out.summary.partition.union_count(),
                                                out.summary.union_worth.size()));
  }
  return out;
}

GameFile load_game_file(const std::string& path) { return parse_game_file(read_file(path)); }

// Building specs -------------------------------------------------------------

BuildingSpec parse_building_spec(const std::string& text) {
  const json doc = parse_json(text, "building spec");
  if (!doc.is_object()) throw ParseError("", "a building spec must be a JSON object");
  reject_unknown_keys(doc, "", {"name", "description", "floors", "costModel", "totalCost"});
  BuildingSpec spec;
  if (!doc.contains("floors") || !doc["floors"].is_array()) throw ParseError("floors", "expected a list of floors");
  const json& floors = doc["floors"];
  for (std::size_t f = 0; f < floors.size(); ++f) {
    const std::string where = fmt::format("floors[{}]", f);
    const json& fl = floors[f];
    if (!fl.is_object()) throw ParseError(where, "expected an object");
    reject_unknown_keys(fl, where, {"label", "apartments"});
    Floor floor;
    floor.label = fl.value("label", fmt::format("floor {}", f + 1));
    if (!fl.contains("apartments") || !fl["apartments"].is_array()) {
      throw ParseError(where + ".apartments", "expected a list of apartments");
    }
    for (std::size_t a = 0; a < fl["apartments"].size(); ++a) {
      const std::string aw = fmt::format("{}.apartments[{}]", where, a);
      const json& ap = fl["apartments"][a];
      if (!ap.is_object()) throw ParseError(aw, "expected an object");
      reject_unknown_keys(ap, aw, {"label", "surface"});
      if (!ap.contains("surface")) throw ParseError(aw + ".surface", "missing field");
      floor.apartments.push_back({ap.value("label", fmt::format("{}-{}", f + 1, a + 1)),
                                  number_at(ap["surface"], aw + ".surface")});
    }
    spec.floors.push_back(std::move(floor));
  }
  if (doc.contains("costModel")) {
    const json& c = doc["costModel"];
    if (!c.is_object()) throw ParseError("costModel", "expected an object");
    reject_unknown_keys(c, "costModel",
                        {"machineCost", "hollowFixed", "hollowBase", "hollowIncrementPerFloor", "accessPerFloor"});
    const auto get = [&](const char* key, double fallback) {
      return c.contains(key) ? number_at(c[key], std::string("costModel.") + key) : fallback;
    };
    spec.cost.machine_cost = get("machineCost", spec.cost.machine_cost);
    spec.cost.hollow_fixed = get("hollowFixed", spec.cost.hollow_fixed);
    spec.cost.hollow_base = get("hollowBase", spec.cost.hollow_base);
    spec.cost.hollow_increment_per_floor = get("hollowIncrementPerFloor", spec.cost.hollow_increment_per_floor);
    spec.cost.access_per_floor = get("accessPerFloor", spec.cost.access_per_floor);
  }
  if (!doc.contains("totalCost")) throw ParseError("totalCost", "missing field");
  spec.total_cost = number_at(doc["totalCost"], "totalCost");
  try {
    spec.validate();
  } catch (const SpecError& e) {
    throw ParseError("floors", e.what());
  }
  return spec;
}

BuildingSpec load_building_spec(const std::string& path) { return parse_building_spec(read_file(path)); }

std::string building_spec_to_json(const BuildingSpec& spec) {
  json floors = json::array();
  for (const Floor& f : spec.floors) {
    json apartments = json::array();
    for (const Apartment& a : f.apartments) apartments.push_back({{"label", a.label}, {"surface", a.surface}});
    floors.push_back({{"label", f.label}, {"apartments", apartments}});
  }
  json doc;
  doc["floors"] = floors;
  doc["costModel"] = {{"machineCost", spec.cost.machine_cost},
                      {"hollowFixed", spec.cost.hollow_fixed},
                      {"hollowBase", spec.cost.hollow_base},
                      {"hollowIncrementPerFloor", spec.cost.hollow_increment_per_floor},
                      {"accessPerFloor", spec.cost.access_per_floor}};
  doc["totalCost"] = spec.total_cost;
  return doc.dump(2);
}

// Tables ---------------------------------------------------------------------

RenderMode parse_render_mode(const std::string& text) {
  if (text == "text") return RenderMode::Text;
  if (text == "csv") return RenderMode::Csv;
  if (text == "json") return RenderMode::Json;
  throw ParseError("format", fmt::format("unknown render mode '{}' (text, csv, json)", text));
}

double OutputTable::column_total(std::size_t c) const {
  double s = 0.0;
  for (double x : values[c]) s += x;
  return s;
}

std::string format_fixed4(double x) {
  double r = std::nearbyint(x * 1e4);
  if (r == 0.0) r = 0.0;  // drops the sign of -0
  return fmt::format("{:.4f}", r / 1e4);
}

std::string render(const OutputTable& t, RenderMode mode) {
  if (mode == RenderMode::Json) return table_to_json(t).dump(2) + "\n";

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = t.key_headers;
  header.insert(header.end(), t.columns.begin(), t.columns.end());
  cells.push_back(header);
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    std::vector<std::string> row = t.keys[r];
    for (std::size_t c = 0; c < t.columns.size(); ++c) row.push_back(format_fixed4(t.values[c][r]));
    cells.push_back(std::move(row));
  }
  std::vector<std::string> totals(t.key_headers.size(), "");
  if (!totals.empty()) totals[0] = "total";
  for (std::size_t c = 0; c < t.columns.size(); ++c) totals.push_back(format_fixed4(t.column_total(c)));
  cells.push_back(std::move(totals));

  std::string out;
  if (mode == RenderMode::Csv) {
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
      out += '\n';
    }
    return out;
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  if (!t.title.empty()) out += t.title + "\n";
  const std::size_t nkeys = t.key_headers.size();
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += i < nkeys ? fmt::format("{:<{}}", row[i], width[i]) : fmt::format("{:>{}}", row[i], width[i]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  for (const auto& note : t.notes) out += "note: " + note + "\n";
  return out;
}

OutputTable parse_table_json(const std::string& text) {
  const json j = parse_json(text, "table");
  try {
    OutputTable t;
    t.title = j.at("title").get<std::string>();
    t.key_headers = j.at("keyHeaders").get<std::vector<std::string>>();
    t.keys = j.at("rows").get<std::vector<std::vector<std::string>>>();
    for (const auto& c : j.at("columns")) {
      t.columns.push_back(c.at("name").get<std::string>());
      t.values.push_back(c.at("values").get<std::vector<double>>());
    }
    t.notes = j.at("notes").get<std::vector<std::string>>();
    return t;
  } catch (const json::exception& e) {
    throw ParseError("table", e.what());
  }
}

}  // namespace egal
