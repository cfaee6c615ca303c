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
 * \file egal/tables.hpp
 *
 * \brief Per-apartment allocation tables for the elevator example.
 */

#ifndef EGAL_TABLES_HPP
#define EGAL_TABLES_HPP

#include <vector>

#include "egal/io.hpp"
#include "egal/scenarios.hpp"
#include "egal/values.hpp"

namespace egal {

/// One column of an elevator table: who receives equal treatment, and how.
struct ElevatorRule {
  Subjects subjects;
  ValueSpec value;

  /// "dutch" or "spanish", a colon, then a value name, e.g. "spanish:edu".
  static ElevatorRule parse(const std::string& text);
  std::string name() const;
};

/// Shares per apartment, quota-unit rules aggregated per apartment.
Allocation elevator_allocation(const BuildingSpec& spec, const ElevatorRule& rule);

/// Rows keyed by (floor, apartment), one column per rule, top floor first.
OutputTable elevator_table(const BuildingSpec& spec, const std::vector<ElevatorRule>& rules);

/// The value shown by reference table 1..6: ED, ED^U, ESD, ESD1^U, ESD2^U, ESD3^U.
ValueKind table_value(int table_id);

/// Dutch and Spanish columns of reference table 1..6 on the standard
/// building. Throws ConfigError for any other id.
OutputTable reproduce_table(int table_id);

}  // namespace egal

#endif  // EGAL_TABLES_HPP
