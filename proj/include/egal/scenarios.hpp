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
 * \file egal/scenarios.hpp
 *
 * \brief Elevator cost-sharing games for an apartment building.
 *
 * The cost of installing an elevator is shared among apartments (Dutch rule)
 * or among quota units, one unit per square meter (Spanish rule). Floors form
 * the a priori unions. Every subject on floor f (0 = lowest served floor)
 * has stand-alone cost
 *
 *   machine + access + hollowFixed + hollowBase + f * hollowIncrementPerFloor
 *
 * and so does the floor as a whole; the grand coalition costs totalCost.
 *
 * Subjects are ordered top floor first, apartments in listed order, and the
 * quota units of an apartment consecutively.
 */

#ifndef EGAL_SCENARIOS_HPP
#define EGAL_SCENARIOS_HPP

#include <string>
#include <vector>

#include "egal/game.hpp"

namespace egal {

struct Apartment {
  std::string label;
  /// Surface in quota units; must be a positive integer.
  double surface = 0.0;
};

struct Floor {
  std::string label;
  std::vector<Apartment> apartments;
};

struct CostModel {
  double machine_cost = 50.0;
  double hollow_fixed = 10.0;
  double hollow_base = 10.0;
  double hollow_increment_per_floor = 10.0;
  double access_per_floor = 10.0;
};

struct BuildingSpec {
  /// Bottom to top.
  std::vector<Floor> floors;
  CostModel cost;
  double total_cost = 120.0;

  /// Throws SpecError when a surface is not a positive integer or the
  /// building has no apartment.
  void validate() const;

  /// Three floors: one 180 m2 apartment, then 100 and 90 m2, then three of
  /// 60 m2; machine 50, hollow 10 + 10/20/30, access 10 per floor, total 120.
  static BuildingSpec standard();
};

enum class Subjects { Apartments, QuotaUnits };

/// Per-apartment unit counts and the unit -> apartment index.
struct QuotaMap {
  std::vector<std::size_t> units_per_apartment;
  std::vector<std::size_t> apartment_of_unit;

  std::size_t unit_count() const { return apartment_of_unit.size(); }
};

/// Apartments in subject order, with their floor labels.
struct ApartmentRow {
  std::string floor;
  std::string apartment;
};

/// Stand-alone cost of a subject (or of the whole floor) on floor f.
double floor_cost(const CostModel& cost, std::size_t floor_index);

/// Cost game summary with unions = floors.
GameSummary elevator_summary(const BuildingSpec& spec, Subjects subjects);

QuotaMap quota_map(const BuildingSpec& spec);
std::vector<ApartmentRow> apartment_rows(const BuildingSpec& spec);

/// Sums each apartment's unit shares. Throws SizeMismatch on length mismatch.
Allocation aggregate(const Allocation& units, const QuotaMap& quota);

}  // namespace egal

#endif  // EGAL_SCENARIOS_HPP
