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

#include "egal/scenarios.hpp"

#include <cmath>
#include <fmt/format.h>

namespace egal {

namespace {

// Floor indices in subject order (top floor first).
std::vector<std::size_t> top_down(const BuildingSpec& spec) {
  std::vector<std::size_t> order;
  for (std::size_t f = spec.floors.size(); f-- > 0;) order.push_back(f);
  return order;
}

std::size_t units_of(const Apartment& a) { return static_cast<std::size_t>(a.surface); }

}  // namespace

void BuildingSpec::validate() const {
  if (floors.empty()) throw SpecError("a building needs at least one floor");
  std::size_t apartments = 0;
  for (const Floor& f : floors) {
    if (f.apartments.empty()) throw SpecError(fmt::format("floor '{}' has no apartment", f.label));
    for (const Apartment& a : f.apartments) {
      if (!(a.surface > 0.0) || a.surface != std::floor(a.surface) || a.surface > 1e7) {
        throw SpecError(fmt::format("apartment '{}' has surface {}; quota units must be positive integers",
                                    a.label, a.surface));
      }
      ++apartments;
    }
  }
  if (apartments == 0) throw SpecError("a building needs at least one apartment");
}

BuildingSpec BuildingSpec::standard() {
  BuildingSpec spec;
  spec.floors = {
      {"1st floor", {{"1A", 180}}},
      {"2nd floor", {{"2A", 100}, {"2B", 90}}},
      {"3rd floor", {{"3A", 60}, {"3B", 60}, {"3C", 60}}},
  };
  return spec;
}

double floor_cost(const CostModel& cost, std::size_t floor_index) {
  return cost.machine_cost + cost.access_per_floor + cost.hollow_fixed + cost.hollow_base +
         static_cast<double>(floor_index) * cost.hollow_increment_per_floor;
}

GameSummary elevator_summary(const BuildingSpec& spec, Subjects subjects) {
  spec.validate();
  std::vector<double> singleton;
  std::vector<std::vector<PlayerId>> unions;
  std::vector<double> union_worth;
  for (std::size_t f : top_down(spec)) {
    const double c = floor_cost(spec.cost, f);
    std::vector<PlayerId> members;
    for (const Apartment& a : spec.floors[f].apartments) {
      const std::size_t count = subjects == Subjects::Apartments ? 1 : units_of(a);
      for (std::size_t u = 0; u < count; ++u) {
        members.push_back(singleton.size());
        singleton.push_back(c);
      }
    }
    unions.push_back(std::move(members));
    union_worth.push_back(c);
  }
  const std::size_t n = singleton.size();
  return GameSummary{std::move(singleton), Partition(n, std::move(unions)), std::move(union_worth),
                     spec.total_cost};
}

QuotaMap quota_map(const BuildingSpec& spec) {
  spec.validate();
  QuotaMap q;
  for (std::size_t f : top_down(spec)) {
    for (const Apartment& a : spec.floors[f].apartments) {
      const std::size_t apartment = q.units_per_apartment.size();
      q.units_per_apartment.push_back(units_of(a));
      q.apartment_of_unit.insert(q.apartment_of_unit.end(), units_of(a), apartment);
    }
  }
  return q;
}

std::vector<ApartmentRow> apartment_rows(const BuildingSpec& spec) {
  std::vector<ApartmentRow> rows;
  for (std::size_t f : top_down(spec)) {
    for (const Apartment& a : spec.floors[f].apartments) rows.push_back({spec.floors[f].label, a.label});
  }
  return rows;
}

Allocation aggregate(const Allocation& units, const QuotaMap& quota) {
  if (units.size() != quota.unit_count()) {
    throw SizeMismatch(fmt::format("allocation has {} entries but the quota map has {} units", units.size(),
                                   quota.unit_count()));
  }
  Allocation out{std::vector<double>(quota.units_per_apartment.size(), 0.0)};
  for (std::size_t u = 0; u < units.size(); ++u) out.shares[quota.apartment_of_unit[u]] += units[u];
  return out;
}

}  // namespace egal
