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

/**
 * \file egal/io.hpp
 *
 * \brief Game files, building specifications and allocation tables.
 *
 * All documents are JSON; see docs/formats.md for the schemas.
 */

#ifndef EGAL_IO_HPP
#define EGAL_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "egal/game.hpp"
#include "egal/scenarios.hpp"

namespace egal {

/// A parsed game file: either an explicit characteristic function (with an
/// optional partition, P^n by default) or a summary-only form.
struct GameFile {
  std::vector<std::string> labels;
  std::optional<ExplicitGame> game;
  GameSummary summary;

  bool is_explicit() const { return game.has_value(); }
  const Partition& partition() const { return summary.partition; }
};

/// Throws ParseError with the offending field (or byte offset) in where().
GameFile parse_game_file(const std::string& text);
GameFile load_game_file(const std::string& path);

BuildingSpec parse_building_spec(const std::string& text);
BuildingSpec load_building_spec(const std::string& path);
std::string building_spec_to_json(const BuildingSpec& spec);

enum class RenderMode { Text, Csv, Json };
RenderMode parse_render_mode(const std::string& text);

/// Rows keyed by one or more key columns, one numeric column per value.
struct OutputTable {
  std::string title;
  std::vector<std::string> key_headers;
  std::vector<std::vector<std::string>> keys;  ///< keys[row][key column]
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;     ///< values[column][row]
  std::vector<std::string> notes;

  std::size_t row_count() const { return keys.size(); }
  double column_total(std::size_t c) const;
};

/// 4 decimals, round-half-even, no negative zero.
std::string format_fixed4(double x);

/// Text and CSV print 4 decimals and a totals row; JSON keeps full precision.
std::string render(const OutputTable& table, RenderMode mode);
/// Inverse of render(table, RenderMode::Json).
OutputTable parse_table_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace egal

#endif  // EGAL_IO_HPP
