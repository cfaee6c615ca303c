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

// egal: egalitarian values for TU-games with a priori unions.
//
//   egal solve GAME.json --values edu,esd2u [--format text|csv|json]
//   egal check --value edu --axioms eff,add,swu,sau,npp [--trials N] [--seed S]
//   egal check --value esd3u --axioms qgp --search
//   egal check --independence t3
//   egal reproduce 4
//   egal elevator [SPEC.json] --rules dutch:esd1u,spanish:esd1u
//   egal replay REPORTS.jsonl
//
// Exit status: 0 ok, 1 violation, 2 parse or configuration error,
// 3 inconclusive search, 4 internal error.

#include <CLI11.hpp>
#include <iostream>

#include "egal/commands.hpp"

namespace {

int parse_theorem(const std::string& text) {
  if (text.size() == 2 && (text[0] == 't' || text[0] == 'T') && text[1] >= '1' && text[1] <= '4') {
    return text[1] - '0';
  }
  throw CLI::ValidationError("--independence", "expected t1, t2, t3 or t4");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace egal::cli;

  CLI::App app{"Egalitarian values for TU-games with a priori unions"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "csv", "json"});

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Compute allocations for a game file");
  s->add_option("game", solve.game_path, "Game file (JSON)")->required();
  s->add_option("-v,--values", solve.values, "Values: ed, esd, edu, esd1u, esd2u, esd3u, T<t>.<i>, all")
      ->delimiter(',');
  s->add_option("-f,--format", solve.format, "Output format")->check(formats);

  CheckOptions check;
  std::string theorem;
  std::uint64_t seed = 0;
  auto* c = app.add_subcommand("check", "Check axioms on generated games or on a game file");
  c->add_option("-g,--game", check.game_path, "Check this explicit game instead of generated ones");
  c->add_option("--value", check.value, "Value to check");
  c->add_option("-a,--axioms", check.axioms, "Axioms: eff, add, swu, sau, wsau, npp, dpp, dupp, dunpp, qgp, "
                                             "coalitional")
      ->delimiter(',');
  c->add_option("-n,--trials", check.trials, "Non-vacuous random trials per check");
  auto* seed_opt = c->add_option("-s,--seed", seed, "Random seed (default: EGAL_SEED or 1)");
  c->add_flag("--search", check.search, "Witness search: stop at the first violation");
  c->add_flag("--exhaustive", check.exhaustive, "Also run every 3-player game with worths in {-1,0,1}");
  c->add_option("--n-min", check.n_min, "Smallest generated player count");
  c->add_option("--n-max", check.n_max, "Largest generated player count");
  c->add_option("--worth-lo", check.worth_lo, "Lowest generated worth");
  c->add_option("--worth-hi", check.worth_hi, "Highest generated worth");
  c->add_flag("--integral", check.integral_only, "Generate integer worths only");
  c->add_option("--independence", theorem, "Run the independence suite of theorem t1..t4");
  c->add_flag("--characterization", check.characterization, "Run the characterization suite");
  c->add_option("-f,--format", check.format, "Report format")->check(CLI::IsMember({"text", "jsonl"}));

  ReproduceOptions reproduce;
  auto* r = app.add_subcommand("reproduce", "Print reference table 1..6 of the elevator example");
  r->add_option("table", reproduce.table, "Table id")->required()->check(CLI::Range(1, 6));
  r->add_option("-f,--format", reproduce.format, "Output format")->check(formats);

  ElevatorOptions elevator;
  auto* e = app.add_subcommand("elevator", "Share an elevator's cost among apartments");
  e->add_option("spec", elevator.spec_path, "Building spec (JSON); default: the standard building");
  e->add_option("-r,--rules", elevator.rules, "Rules like dutch:edu or spanish:esd1u, or all")->delimiter(',');
  e->add_option("-f,--format", elevator.format, "Output format")->check(formats);
  e->add_flag("--dump-spec", elevator.dump_spec, "Print the building spec as JSON");

  ReplayOptions replay;
  auto* p = app.add_subcommand("replay", "Re-evaluate the witnesses of a JSON-lines report stream");
  p->add_option("reports", replay.report_path, "Report file, or - for standard input");

  try {
    app.parse(argc, argv);
    if (!theorem.empty()) check.independence = parse_theorem(theorem);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }
  if (*seed_opt) check.seed = seed;

  if (*s) return cmd_solve(solve, std::cout, std::cerr);
  if (*c) return cmd_check(check, std::cout, std::cerr);
  if (*r) return cmd_reproduce(reproduce, std::cout, std::cerr);
  if (*e) return cmd_elevator(elevator, std::cout, std::cerr);
  return cmd_replay(replay, std::cin, std::cout, std::cerr);
}
