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
 * \file egal/commands.hpp
 *
 * \brief The subcommands of the `egal` tool, callable without a process.
 *
 * Each command writes its result to `out`, diagnostics to `err`, and returns
 * the process exit status.
 */

#ifndef EGAL_COMMANDS_HPP
#define EGAL_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "egal/axioms.hpp"
#include "egal/io.hpp"
#include "egal/values.hpp"

namespace egal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitInternal = 4;

/// Seed from the EGAL_SEED environment variable when `explicit_seed` is empty,
/// else 1. Throws ConfigError when EGAL_SEED is not an unsigned integer.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed);

/// Allocation table of a game file, one column per value. Catalog variants
/// need the explicit form. Throws SelfCheckError when a column is not
/// efficient.
OutputTable solve_table(const GameFile& file, const std::vector<ValueSpec>& values);

struct SolveOptions {
  std::string game_path;
  std::vector<std::string> values{"edu"};
  std::string format = "text";
};
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);

struct CheckOptions {
  /// Check one explicit game from a file instead of generated ones.
  std::optional<std::string> game_path;
  std::string value = "edu";
  std::vector<std::string> axioms;
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  bool search = false;
  bool exhaustive = false;
  std::size_t n_min = 2;
  std::size_t n_max = 6;
  double worth_lo = -4.0;
  double worth_hi = 4.0;
  bool integral_only = false;
  /// Run the independence suite of theorem 1..4 instead of single checks.
  std::optional<int> independence;
  bool characterization = false;
  /// "text" or "jsonl" (one report per line, readable by `replay`).
  std::string format = "text";
};

/// Checks built from the options (no file mode, no suites).
std::vector<CheckReport> run_checks(const CheckOptions& opts);
/// Exit status for a batch of reports. In suite mode a report passes when it
/// meets its expectation; otherwise a violation is a failure.
int exit_status(const std::vector<CheckReport>& reports, bool suite);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);

struct ReproduceOptions {
  int table = 1;
  std::string format = "text";
};
int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err);

struct ElevatorOptions {
  /// Empty means the built-in standard building.
  std::string spec_path;
  std::vector<std::string> rules{"dutch:ed", "spanish:ed"};
  std::string format = "text";
  /// Print the building spec as JSON instead of computing.
  bool dump_spec = false;
};
int cmd_elevator(const ElevatorOptions& opts, std::ostream& out, std::ostream& err);

struct ReplayOptions {
  /// "-" reads standard input.
  std::string report_path = "-";
};
int cmd_replay(const ReplayOptions& opts, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace egal::cli

#endif  // EGAL_COMMANDS_HPP
