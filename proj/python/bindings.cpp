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

// Thin bindings. Tables and reports cross the boundary as JSON text; the
// Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "egal/axioms.hpp"
#include "egal/errors.hpp"
#include "egal/io.hpp"
#include "egal/report.hpp"
#include "egal/tables.hpp"
#include "egal/values.hpp"

namespace py = pybind11;

namespace {

using PartitionList = std::vector<std::vector<egal::PlayerId>>;

std::vector<double> value_of_summary(const std::string& value, const std::vector<double>& singletons,
                                     const PartitionList& partition, const std::vector<double>& union_worths,
                                     double total) {
  const egal::GameSummary s{singletons, egal::Partition(singletons.size(), partition), union_worths, total};
  s.validate();
  return egal::compute_value(egal::ValueSpec::parse(value), s).shares;
}

std::vector<double> value_of_game(const std::string& value, std::size_t n, const std::vector<double>& worths,
                                  const std::optional<PartitionList>& partition) {
  const egal::ExplicitGame g(n, worths);
  const egal::Partition p = partition ? egal::Partition(n, *partition) : egal::Partition::singletons(n);
  return egal::compute_value(egal::ValueSpec::parse(value), g, p).shares;
}

std::string reproduce_json(int table_id) {
  return egal::render(egal::reproduce_table(table_id), egal::RenderMode::Json);
}

std::string elevator_json(const std::vector<std::string>& rules, const std::optional<std::string>& spec_json) {
  const egal::BuildingSpec spec =
      spec_json ? egal::parse_building_spec(*spec_json) : egal::BuildingSpec::standard();
  std::vector<egal::ElevatorRule> parsed;
  for (const auto& r : rules) parsed.push_back(egal::ElevatorRule::parse(r));
  return egal::render(egal::elevator_table(spec, parsed), egal::RenderMode::Json);
}

std::string check_json(const std::string& value, const std::string& axiom, std::size_t trials, std::uint64_t seed,
                       bool search, bool exhaustive) {
  egal::CheckConfig config;
  config.budget = trials;
  config.seed = seed;
  config.search = search;
  config.exhaustive = exhaustive;
  py::gil_scoped_release release;
  return egal::report_to_line(egal::check_axiom(egal::ValueSpec::parse(value), egal::parse_axiom(axiom), config));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Egalitarian values for TU-games with a priori unions (native core)";
  static py::exception<egal::Error> error(m, "EgalError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const egal::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("value_of_summary", &value_of_summary, py::arg("value"), py::arg("singletons"), py::arg("partition"),
        py::arg("union_worths"), py::arg("total"));
  m.def("value_of_game", &value_of_game, py::arg("value"), py::arg("n"), py::arg("worths"),
        py::arg("partition") = std::nullopt);
  m.def("reproduce_json", &reproduce_json, py::arg("table_id"));
  m.def("elevator_json", &elevator_json, py::arg("rules"), py::arg("spec_json") = std::nullopt);
  m.def("check_json", &check_json, py::arg("value"), py::arg("axiom"), py::arg("trials") = 200,
        py::arg("seed") = 1, py::arg("search") = false, py::arg("exhaustive") = false);
}
