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

#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "egal/commands.hpp"
#include "egal/errors.hpp"
#include "egal/report.hpp"
#include "egal/tables.hpp"

using namespace egal;
using namespace egal::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class Opts, class F>
Run run(F&& command, const Opts& opts) {
  std::ostringstream out, err;
  const int code = command(opts, out, err);
  return {code, out.str(), err.str()};
}

std::vector<double> column(const OutputTable& t, std::size_t c) { return t.values.at(c); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve: elevator summary with ED^U") {
    const GameFile f = load_game_file(EGAL_TEST_DATA "/elevator_apartments.json");
    const OutputTable t = solve_table(f, {ValueKind::EDU});
    const auto expected = reproduce_table(2).values[0];
    REQUIRE(column(t, 0).size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(column(t, 0)[i] == doctest::Approx(expected[i]));
    CHECK(t.keys[5] == std::vector<std::string>{"1A", "P3"});
  }

  TEST_CASE("solve: zero game gives zeros everywhere") {
    const OutputTable t = solve_table(load_game_file(EGAL_TEST_DATA "/zero_game.json"), standard_values());
    CHECK(t.columns.size() == 6);
    for (const auto& col : t.values) {
      for (double x : col) CHECK(x == 0);
    }
  }

  TEST_CASE("solve: worked example and variants") {
    SolveOptions o;
    o.game_path = EGAL_TEST_DATA "/esd2u_example.json";
    o.values = {"esd2u"};
    o.format = "csv";
    const Run r = run(cmd_solve, o);
    CHECK(r.code == kExitOk);
    CHECK(r.out == "player,union,ESD2^U\n0,P1,3.0000\n1,P1,5.0000\n2,P2,4.0000\ntotal,,12.0000\n");

    o.game_path = EGAL_TEST_DATA "/min_index.json";
    o.values = {"T1.4"};
    const Run m = run(cmd_solve, o);
    CHECK(m.code == kExitOk);
    CHECK(m.out.find("0,P1,6.0000\n1,P1,0.0000\n2,P2,6.0000\n3,P2,0.0000") != std::string::npos);
  }

  TEST_CASE("solve: output is byte-identical across runs") {
    SolveOptions o;
    o.game_path = EGAL_TEST_DATA "/esd2u_example.json";
    o.values = {"all"};
    CHECK(run(cmd_solve, o).out == run(cmd_solve, o).out);
  }

  TEST_CASE("solve: errors") {
    SolveOptions o;
    o.game_path = EGAL_TEST_DATA "/bad_syntax.json";
    Run r = run(cmd_solve, o);
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("parse error") != std::string::npos);

    o.game_path = EGAL_TEST_DATA "/elevator_apartments.json";
    o.values = {"T2.2"};
    CHECK(run(cmd_solve, o).code == kExitUsage);

    o.values = {"T1.1"};
    o.game_path = EGAL_TEST_DATA "/esd2u_example.json";
    r = run(cmd_solve, o);
    CHECK(r.code == kExitInternal);  // v(i) is not efficient
    CHECK(r.err.find("internal error") != std::string::npos);

    o.values = {"T1.4"};  // union {2} is too small
    CHECK(run(cmd_solve, o).code == kExitUsage);

    o.values = {"edu"};
    o.format = "yaml";
    CHECK(run(cmd_solve, o).code == kExitUsage);
  }

  TEST_CASE("check: statuses") {
    CheckOptions o;
    o.value = "edu";
    o.axioms = {"eff", "add", "swu", "sau", "npp"};
    o.trials = 100;
    Run r = run(cmd_check, o);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("violated") == std::string::npos);

    o.value = "esd3u";
    o.axioms = {"qgp"};
    o.search = true;
    o.format = "jsonl";
    r = run(cmd_check, o);
    CHECK(r.code == kExitViolation);
    std::istringstream lines(r.out);
    const auto reports = read_report_stream(lines);
    REQUIRE(reports.size() == 1);
    REQUIRE(reports[0].witness);

    ReplayOptions replay;
    std::istringstream in(r.out);
    std::ostringstream out, err;
    CHECK(cmd_replay(replay, in, out, err) == kExitOk);
    CHECK(out.str().find("1 witnesses replayed, 0 not reproduced") != std::string::npos);

    o.value = "edu";
    o.axioms = {"npp"};
    r = run(cmd_check, o);
    CHECK(r.code == kExitInconclusive);

    o.search = false;
    o.axioms = {"bogus"};
    CHECK(run(cmd_check, o).code == kExitUsage);
    o.axioms = {};
    CHECK(run(cmd_check, o).code == kExitUsage);
    o.axioms = {"eff"};
    o.trials = 0;
    CHECK(run(cmd_check, o).code == kExitUsage);
    o.trials = 10;
    o.n_min = 5;
    o.n_max = 3;
    CHECK(run(cmd_check, o).code == kExitUsage);
  }

  TEST_CASE("check: a game file") {
    CheckOptions o;
    o.game_path = EGAL_TEST_DATA "/esd2u_example.json";
    o.value = "esd2u";
    o.axioms = {"eff", "swu"};
    Run r = run(cmd_check, o);
    CHECK(r.code == kExitInconclusive);  // SWU is vacuous here: no indistinguishable pair
    CHECK(r.out.find("EFF         holds") != std::string::npos);
    o.axioms = {"add"};
    CHECK(run(cmd_check, o).code == kExitUsage);
    o.axioms = {"eff"};
    o.game_path = EGAL_TEST_DATA "/elevator_apartments.json";
    CHECK(run(cmd_check, o).code == kExitUsage);
  }

  TEST_CASE("check: independence suite") {
    CheckOptions o;
    o.independence = 2;
    o.trials = 50;
    const Run r = run(cmd_check, o);
    CHECK(r.out.find("T2.5") != std::string::npos);
    // T2.1 claims SAU, which v(i) does not satisfy.
    CHECK(r.code == kExitViolation);
  }

  TEST_CASE("seed override") {
    CHECK(resolve_seed(9) == 9);
    ::setenv("EGAL_SEED", "1234", 1);
    CHECK(resolve_seed(std::nullopt) == 1234);
    ::setenv("EGAL_SEED", "12x", 1);
    CHECK_THROWS_AS(resolve_seed(std::nullopt), ConfigError);
    ::unsetenv("EGAL_SEED");
    CHECK(resolve_seed(std::nullopt) == 1);
  }

  TEST_CASE("reproduce") {
    ReproduceOptions o;
    o.table = 1;
    Run r = run(cmd_reproduce, o);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("1A            20.0000       39.2727") != std::string::npos);
    o.table = 6;
    r = run(cmd_reproduce, o);
    CHECK(r.out.find("-66.6667") != std::string::npos);
    CHECK(r.out.find("-2060.0000") != std::string::npos);

    o.format = "csv";
    o.table = 4;
    const std::string t4 = run(cmd_reproduce, o).out;
    o.table = 5;
    CHECK(run(cmd_reproduce, o).out == t4);
    CHECK(reproduce_table(3).notes.size() == 1);
    CHECK(reproduce_table(4).notes.size() == 1);
    CHECK(reproduce_table(1).notes.empty());

    o.table = 7;
    CHECK(run(cmd_reproduce, o).code == kExitUsage);
  }

  TEST_CASE("elevator") {
    ElevatorOptions o;
    o.rules = {"spanish:edu"};
    o.format = "csv";
    Run r = run(cmd_elevator, o);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("2nd floor,2A,21.0526\n2nd floor,2B,18.9474") != std::string::npos);

    o.rules = {"dutch:esd1u"};
    r = run(cmd_elevator, o);
    CHECK(r.out.find("3rd floor,3A,16.6667\n") != std::string::npos);
    CHECK(r.out.find("1st floor,1A,30.0000\n") != std::string::npos);

    o.spec_path = EGAL_TEST_DATA "/uniform_building.json";
    o.rules = {"all"};
    o.format = "json";
    r = run(cmd_elevator, o);
    CHECK(r.code == kExitOk);
    const OutputTable t = parse_table_json(r.out);
    REQUIRE(t.columns.size() == 12);
    // Columns come in dutch/spanish pairs: ed, esd, edu, esd1u, esd2u, esd3u.
    CHECK(t.columns[4] == "dutch:edu");
    for (std::size_t c : {0, 4, 6}) {
      for (std::size_t i = 0; i < t.row_count(); ++i) {
        CHECK(t.values[c + 1][i] == doctest::Approx(t.values[c][i]).epsilon(1e-9));
      }
    }

    o.rules = {"belgian:edu"};
    CHECK(run(cmd_elevator, o).code == kExitUsage);
    o.rules = {"dutch:T1.1"};
    CHECK(run(cmd_elevator, o).code == kExitUsage);
    o.spec_path = EGAL_TEST_DATA "/bad_building.json";
    o.rules = {"dutch:ed"};
    r = run(cmd_elevator, o);
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("surface") != std::string::npos);

    ElevatorOptions dump;
    dump.dump_spec = true;
    r = run(cmd_elevator, dump);
    CHECK(parse_building_spec(r.out).floors.size() == 3);
  }

  TEST_CASE("replay detects tampering") {
    CheckConfig c;
    c.search = true;
    c.budget = 10;
    CheckReport rep = check_axiom(ValueKind::ESD3U, AxiomId::SAU, c);
    REQUIRE(rep.witness);
    rep.witness->expected += 0.5;
    std::istringstream in(report_to_line(rep));
    std::ostringstream out, err;
    CHECK(cmd_replay({}, in, out, err) == kExitViolation);
    CHECK(out.str().find("NOT reproduced") != std::string::npos);
  }
}
