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

#include "egal/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <istream>
#include <ostream>

#include "egal/errors.hpp"
#include "egal/report.hpp"
#include "egal/tables.hpp"

namespace egal::cli {

namespace {

// Maps library exceptions to exit statuses.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const SelfCheckError& e) {
    err << "egal: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    err << "egal: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "egal: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "egal: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

std::string worths_to_string(const ExplicitGame& g) {
  std::string out;
  for (std::size_t s = 1; s < g.worths().size(); ++s) {
    if (g.worths()[s] == 0.0) continue;
    if (!out.empty()) out += ' ';
    out += fmt::format("{}={}", Coalition(static_cast<Coalition::Mask>(s)).to_string(), g.worths()[s]);
  }
  return out.empty() ? "zero game" : out;
}

std::string report_to_text(const CheckReport& r) {
  std::string line = fmt::format("{:<6} {:<11} {:<12} trials={} vacuous={} exhaustive={}", r.value.label(),
                                 to_string(r.axiom), to_string(r.outcome), r.trials_run, r.vacuous_trials,
                                 r.exhaustive_configs);
  if (r.expect) line += fmt::format(" expect={} {}", to_string(*r.expect), r.meets_expectation() ? "ok" : "FAIL");
  if (!r.note.empty()) line += "  (" + r.note + ")";
  line += '\n';
  if (r.witness) {
    const Witness& w = *r.witness;
    std::string subject;
    for (std::size_t s : w.subject) subject += (subject.empty() ? "" : ",") + std::to_string(s);
    line += fmt::format("  witness [{}]: n={} partition={} subject=({}) observed={} expected={}\n", r.witness_tier,
                        w.game.player_count(), w.partition.to_string(), subject, w.observed, w.expected);
    line += "    v: " + worths_to_string(w.game) + "\n";
    if (w.other) line += "    w: " + worths_to_string(*w.other) + "\n";
    if (!w.detail.empty()) line += "    " + w.detail + "\n";
  }
  return line;
}

void write_reports(const std::vector<CheckReport>& reports, const std::string& format, std::ostream& out) {
  if (format != "text" && format != "jsonl") throw ConfigError(fmt::format("unknown report format '{}'", format));
  for (const CheckReport& r : reports) {
    if (format == "jsonl") {
      out << report_to_line(r) << "\n";
    } else {
      out << report_to_text(r);
    }
  }
}

std::vector<ValueSpec> parse_values(const std::vector<std::string>& names) {
  if (names.empty()) throw ConfigError("no value requested");
  std::vector<ValueSpec> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.insert(out.end(), standard_values().begin(), standard_values().end());
    } else {
      out.push_back(ValueSpec::parse(n));
    }
  }
  return out;
}

std::vector<CheckReport> check_file(const CheckOptions& opts, const ValueSpec& value,
                                    const std::vector<AxiomId>& axioms) {
  const GameFile file = load_game_file(*opts.game_path);
  if (!file.is_explicit()) throw ConfigError("axiom checks on a file need the explicit form (coalitions)");
  std::vector<CheckReport> out;
  for (AxiomId a : axioms) {
    if (a == AxiomId::ADD) throw ConfigError("ADD needs pairs of games; run it without --game");
    const InstanceResult r = evaluate_axiom(value, a, *file.game, file.partition());
    CheckReport report(value, a);
    report.trials_run = r.qualifying == 0 ? 0 : 1;
    report.vacuous_trials = r.qualifying == 0 ? 1 : 0;
    report.outcome = r.violation ? Outcome::Violated : r.qualifying == 0 ? Outcome::Vacuous : Outcome::Holds;
    if (r.violation) {
      report.witness = r.violation;
      report.witness_tier = "file";
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed) {
  if (explicit_seed) return *explicit_seed;
  const char* env = std::getenv("EGAL_SEED");
  if (env == nullptr || *env == '\0') return 1;
  const std::string text(env);
  std::uint64_t seed = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError(fmt::format("EGAL_SEED must be an unsigned integer, got '{}'", text));
  }
  return seed;
}

OutputTable solve_table(const GameFile& file, const std::vector<ValueSpec>& values) {
  const Partition& p = file.partition();
  OutputTable t;
  t.key_headers = {"player", "union"};
  for (std::size_t i = 0; i < file.labels.size(); ++i) {
    t.keys.push_back({file.labels[i], fmt::format("P{}", p.union_of(static_cast<PlayerId>(i)) + 1)});
  }
  for (const ValueSpec& v : values) {
    if (v.is_variant() && !file.is_explicit()) {
      throw ConfigError(fmt::format("{} needs the explicit game form (coalitions)", v.label()));
    }
    const Allocation a = file.is_explicit() ? compute_value(v, *file.game, p) : compute_value(v, file.summary);
    if (!is_efficient(a, file.summary.total)) {
      throw SelfCheckError(fmt::format("{} shares sum to {} instead of {}", v.label(), a.sum(), file.summary.total));
    }
    t.columns.push_back(v.label());
    t.values.push_back(a.shares);
  }
  return t;
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RenderMode mode = parse_render_mode(opts.format);
    const GameFile file = load_game_file(opts.game_path);
    out << render(solve_table(file, parse_values(opts.values)), mode);
    return kExitOk;
  });
}

std::vector<CheckReport> run_checks(const CheckOptions& opts) {
  if (opts.independence) return independence_suite(*opts.independence, opts.trials, resolve_seed(opts.seed));
  if (opts.characterization) return characterization_suite(opts.trials, resolve_seed(opts.seed));

  const ValueSpec value = ValueSpec::parse(opts.value);
  std::vector<AxiomId> axioms;
  for (const auto& a : opts.axioms) axioms.push_back(parse_axiom(a));
  if (axioms.empty()) throw ConfigError("no axiom requested (use --axioms eff,add,...)");
  if (opts.game_path) return check_file(opts, value, axioms);

  if (opts.n_min < 1 || opts.n_min > opts.n_max || opts.n_max > 12) {
    throw ConfigError(fmt::format("player range {}..{} must satisfy 1 <= min <= max <= 12", opts.n_min, opts.n_max));
  }
  if (!(opts.worth_lo < opts.worth_hi)) throw ConfigError("worth range must satisfy lo < hi");
  CheckConfig config;
  config.budget = opts.trials;
  config.seed = resolve_seed(opts.seed);
  config.search = opts.search;
  config.exhaustive = opts.exhaustive;
  config.generator.n_min = opts.n_min;
  config.generator.n_max = opts.n_max;
  config.generator.worths = WorthRange{opts.worth_lo, opts.worth_hi, true};
  config.generator.mix_reals = !opts.integral_only;
  std::vector<CheckReport> out;
  for (AxiomId a : axioms) out.push_back(check_axiom(value, a, config));
  return out;
}

int exit_status(const std::vector<CheckReport>& reports, bool suite) {
  bool violated = false;
  bool inconclusive = false;
  for (const CheckReport& r : reports) {
    if (suite && r.meets_expectation()) continue;
    if (r.outcome == Outcome::Violated) {
      violated = true;
    } else if (r.outcome == Outcome::Inconclusive || r.outcome == Outcome::Vacuous) {
      inconclusive = true;
    } else if (suite) {
      violated = true;  // held where a violation was expected
    }
  }
  if (violated) return kExitViolation;
  if (inconclusive) return kExitInconclusive;
  return kExitOk;
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.format != "text" && opts.format != "jsonl") {
      throw ConfigError(fmt::format("unknown report format '{}' (text, jsonl)", opts.format));
    }
    const auto reports = run_checks(opts);
    write_reports(reports, opts.format, out);
    return exit_status(reports, opts.independence.has_value() || opts.characterization);
  });
}

int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RenderMode mode = parse_render_mode(opts.format);
    const OutputTable t = reproduce_table(opts.table);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (!is_efficient({t.values[c]}, BuildingSpec::standard().total_cost)) {
        throw SelfCheckError(fmt::format("column '{}' is not efficient", t.columns[c]));
      }
    }
    out << render(t, mode);
    return kExitOk;
  });
}

int cmd_elevator(const ElevatorOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BuildingSpec spec = opts.spec_path.empty() ? BuildingSpec::standard() : load_building_spec(opts.spec_path);
    if (opts.dump_spec) {
      out << building_spec_to_json(spec) << "\n";
      return kExitOk;
    }
    const RenderMode mode = parse_render_mode(opts.format);
    std::vector<ElevatorRule> rules;
    for (const auto& r : opts.rules) {
      if (r == "all") {
        for (const ValueSpec& v : standard_values()) {
          rules.push_back({Subjects::Apartments, v});
          rules.push_back({Subjects::QuotaUnits, v});
        }
      } else {
        rules.push_back(ElevatorRule::parse(r));
      }
    }
    if (rules.empty()) throw ConfigError("no rule requested");
    OutputTable t = elevator_table(spec, rules);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (!is_efficient({t.values[c]}, spec.total_cost)) {
        throw SelfCheckError(fmt::format("column '{}' is not efficient", t.columns[c]));
      }
    }
    out << render(t, mode);
    return kExitOk;
  });
}

int cmd_replay(const ReplayOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<CheckReport> reports;
    if (opts.report_path == "-") {
      reports = read_report_stream(in);
    } else {
      std::ifstream file(opts.report_path);
      if (!file) throw ParseError(opts.report_path, "cannot open file");
      reports = read_report_stream(file);
    }
    std::size_t replayed = 0;
    std::size_t failed = 0;
    for (const CheckReport& r : reports) {
      if (!r.witness) continue;
      ++replayed;
      const bool ok = replay_witness(r.value, r.axiom, *r.witness);
      if (!ok) ++failed;
      out << fmt::format("{:<6} {:<11} {}\n", r.value.label(), to_string(r.axiom),
                         ok ? "reproduced" : "NOT reproduced");
    }
    out << fmt::format("{} witnesses replayed, {} not reproduced\n", replayed, failed);
    return failed == 0 ? kExitOk : kExitViolation;
  });
}

}  // namespace egal::cli
