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

#include "egal/axioms.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace egal {

namespace {

constexpr std::size_t kAttemptsPerTrial = 50;

Witness make_witness(const ExplicitGame& game, const Partition& p, const ExplicitGame* other,
                     std::vector<std::size_t> subject, double observed, double expected,
                     std::string detail) {
  Witness w{game, std::nullopt, p, std::move(subject), observed, expected, std::move(detail)};
  if (other != nullptr) w.other = *other;
  return w;
}

bool needs_paired_unions(const ValueSpec& value) {
  if (!value.is_variant()) return false;
  const auto& info = variant_info(*value.variant());
  return info.pool != VariantPool::None &&
         (info.split == VariantSplit::MinIndex || info.split == VariantSplit::MinSingletonSet);
}

template <typename T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return xs[d(rng)];
}

std::size_t pick_index(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, count - 1);
  return d(rng);
}

// Visits exhaustive configurations; `visit` returns true to stop early.
template <typename Visit>
bool walk_small_games(std::size_t n, int lo, int hi, std::uint64_t cap, bool singleton_partition_only,
                      Visit&& visit) {
  const SmallIntegerGames games(n, lo, hi);
  const std::vector<Partition> partitions =
      singleton_partition_only ? std::vector<Partition>{Partition::singletons(n)} : all_partitions(n);
  std::uint64_t visited = 0;
  for (std::uint64_t idx = 0; idx < games.count(); ++idx) {
    const ExplicitGame g = games.game(idx);
    for (const Partition& p : partitions) {
      if (visit(g, p)) return true;
      if (++visited >= cap) return false;
    }
  }
  return false;
}


// Visits every pair (v, w) of small integer games under every partition for
// ADD. Values are cached per game: v + w is itself a small integer game with
// worths in [2 lo, 2 hi], so each pair costs a lookup and n comparisons.
// Violating pairs are re-evaluated with evaluate_axiom to build the witness.
template <class Visit>
bool walk_small_pairs(const ValueSpec& value, std::size_t n, int lo, int hi, std::uint64_t cap, Visit&& visit) {
  const SmallIntegerGames games(n, lo, hi);
  const SmallIntegerGames sums(n, 2 * lo, 2 * hi);
  const std::uint64_t sum_base = static_cast<std::uint64_t>(2 * (hi - lo) + 1);

  // spread[idx] is the index in `sums` of the digit string of game idx, so
  // that the sum of two games has index spread[a] + spread[b].
  std::vector<std::uint64_t> spread(games.count());
  const std::uint64_t base = static_cast<std::uint64_t>(hi - lo + 1);
  for (std::uint64_t idx = 0; idx < games.count(); ++idx) {
    std::uint64_t rest = idx;
    std::uint64_t place = 1;
    std::uint64_t out = 0;
    for (std::size_t s = (std::size_t{1} << n) - 1; s >= 1; --s) {
      out += (rest % base) * place;
      rest /= base;
      place *= sum_base;
    }
    spread[idx] = out;
  }

  const auto values_of = [&](const SmallIntegerGames& family, const Partition& p) {
    std::vector<std::optional<Allocation>> out(family.count());
    for (std::uint64_t idx = 0; idx < family.count(); ++idx) {
      const GameSummary s = summary_from_explicit(family.game(idx), p);
      if (value_in_domain(value, s)) out[idx] = compute_value(value, s);
    }
    return out;
  };

  std::uint64_t visited = 0;
  for (const Partition& p : all_partitions(n)) {
    const auto single = values_of(games, p);
    const auto summed = values_of(sums, p);
    for (std::uint64_t a = 0; a < games.count(); ++a) {
      for (std::uint64_t b = 0; b < games.count(); ++b) {
        const auto& ga = single[a];
        const auto& gb = single[b];
        const auto& gs = summed[spread[a] + spread[b]];
        InstanceResult r;
        if (ga && gb && gs) {
          r.qualifying = 1;
          for (PlayerId i = 0; i < n; ++i) {
            if (!approx_equal((*gs)[i], (*ga)[i] + (*gb)[i])) {
              const ExplicitGame v = games.game(a);
              const ExplicitGame w = games.game(b);
              r = evaluate_axiom(value, AxiomId::ADD, v, p, &w);
              break;
            }
          }
        }
        if (visit(r)) return true;
        if (++visited >= cap) return false;
      }
    }
  }
  return false;
}
}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Violated: return "violated";
    case Outcome::Inconclusive: return "inconclusive";
    case Outcome::Vacuous: return "vacuous";
  }
  return "?";
}

std::string to_string(Expectation e) { return e == Expectation::Hold ? "hold" : "violation"; }

bool CheckReport::meets_expectation() const {
  if (!expect) return outcome == Outcome::Holds || outcome == Outcome::Violated;
  return *expect == Expectation::Hold ? outcome == Outcome::Holds : outcome == Outcome::Violated;
}

bool all_as_expected(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.meets_expectation(); });
}

// Single configuration -------------------------------------------------------

InstanceResult evaluate_axiom(const ValueSpec& value, AxiomId axiom, const ExplicitGame& game,
                              const Partition& partition, const ExplicitGame* other) {
  if (game.player_count() != partition.player_count()) {
    throw PartitionMismatch("partition and game disagree on the player count");
  }
  InstanceResult result;
  const std::size_t n = game.player_count();

  if (axiom == AxiomId::COALITIONAL) {
    const auto base = coalitional_base(value.kind());
    if (!base) throw ConfigError(fmt::format("{} has no classical base value", value.label()));
    const Partition pn = Partition::singletons(n);
    const GameSummary s = summary_from_explicit(game, pn);
    const Allocation g = compute_value(value, s);
    const Allocation f = compute_value(*base, s);
    result.qualifying = 1;
    for (PlayerId i = 0; i < n; ++i) {
      if (!approx_equal(g[i], f[i])) {
        result.violation = make_witness(game, pn, nullptr, {i}, g[i], f[i],
                                        fmt::format("under P^n player {} gets {} but {} gives {}", i, g[i],
                                                    ValueSpec(*base).label(), f[i]));
        return result;
      }
    }
    return result;
  }

  const GameSummary s = summary_from_explicit(game, partition);
  if (!value_in_domain(value, s)) return result;
  const Allocation g = compute_value(value, s);

  switch (axiom) {
    case AxiomId::EFF: {
      result.qualifying = 1;
      const double total = g.sum();
      if (!approx_equal(total, game.grand_worth())) {
        result.violation = make_witness(game, partition, nullptr, {}, total, game.grand_worth(),
                                        fmt::format("shares sum to {} but v(N) = {}", total, game.grand_worth()));
      }
      break;
    }
    case AxiomId::ADD: {
      if (other == nullptr) throw ConfigError("ADD needs a second game");
      const GameSummary so = summary_from_explicit(*other, partition);
      const ExplicitGame both = add_games(game, *other);
      const GameSummary sb = summary_from_explicit(both, partition);
      if (!value_in_domain(value, so) || !value_in_domain(value, sb)) return result;
      const Allocation go = compute_value(value, so);
      const Allocation gb = compute_value(value, sb);
      result.qualifying = 1;
      for (PlayerId i = 0; i < n; ++i) {
        const double expected = g[i] + go[i];
        if (!approx_equal(gb[i], expected)) {
          result.violation = make_witness(game, partition, other, {i}, gb[i], expected,
                                          fmt::format("player {} gets {} in v+w but {} + {} separately", i,
                                                      gb[i], g[i], go[i]));
          break;
        }
      }
      break;
    }
    case AxiomId::SWU: {
      for (std::size_t k = 0; k < partition.union_count() && !result.violation; ++k) {
        const auto& members = partition.members(k);
        for (std::size_t a = 0; a < members.size() && !result.violation; ++a) {
          for (std::size_t b = a + 1; b < members.size(); ++b) {
            const PlayerId i = members[a];
            const PlayerId j = members[b];
            if (!classify_pair(game, i, j)) continue;
            ++result.qualifying;
            if (!approx_equal(g[i], g[j])) {
              result.violation = make_witness(game, partition, nullptr, {i, j}, g[i], g[j],
                                              fmt::format("players {} and {} of union {} are indistinguishable "
                                                          "but get {} and {}", i, j, k, g[i], g[j]));
              break;
            }
          }
        }
      }
      break;
    }
    case AxiomId::SAU:
    case AxiomId::WSAU: {
      if (axiom == AxiomId::WSAU) {
        for (PlayerId j = 0; j < n; ++j) {
          if (game.singleton_worth(j) != 0.0) return result;
        }
      }
      const std::size_t m = partition.union_count();
      if (m < 2) return result;
      const ExplicitGame q = quotient_game(game, partition);
      for (std::size_t k = 0; k < m && !result.violation; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) {
          if (!classify_pair(q, k, l)) continue;
          ++result.qualifying;
          const double sk = g.sum_over(partition.members(k));
          const double sl = g.sum_over(partition.members(l));
          if (!approx_equal(sk, sl)) {
            result.violation = make_witness(game, partition, nullptr, {k, l}, sk, sl,
                                            fmt::format("unions {} and {} are indistinguishable in v/P but "
                                                        "receive {} and {}", k, l, sk, sl));
            break;
          }
        }
      }
      break;
    }
    case AxiomId::NPP:
    case AxiomId::DPP: {
      for (PlayerId i = 0; i < n; ++i) {
        const PlayerClass c = classify_player(game, i);
        const bool hyp = axiom == AxiomId::NPP ? c.nullifying : c.dummifying;
        if (!hyp) continue;
        ++result.qualifying;
        const double expected = axiom == AxiomId::NPP ? 0.0 : game.singleton_worth(i);
        if (!approx_equal(g[i], expected)) {
          result.violation = make_witness(game, partition, nullptr, {i}, g[i], expected,
                                          fmt::format("player {} is {} but gets {} instead of {}", i,
                                                      axiom == AxiomId::NPP ? "nullifying" : "dummifying", g[i],
                                                      expected));
          break;
        }
      }
      break;
    }
    case AxiomId::DUPP:
    case AxiomId::DUNPP: {
      const ExplicitGame q = quotient_game(game, partition);
      for (std::size_t k = 0; k < partition.union_count() && !result.violation; ++k) {
        if (!classify_player(q, k).dummifying) continue;
        const RestrictedGame r = restrict_game(game, partition.coalition(k));
        for (PlayerId local = 0; local < r.mapping.size(); ++local) {
          const PlayerClass c = classify_player(r.game, local);
          const bool hyp = axiom == AxiomId::DUPP ? c.dummifying : c.nullifying;
          if (!hyp) continue;
          ++result.qualifying;
          const PlayerId i = r.mapping[local];
          const double expected = axiom == AxiomId::DUPP ? game.singleton_worth(i) : 0.0;
          if (!approx_equal(g[i], expected)) {
            result.violation = make_witness(
                game, partition, nullptr, {k, i}, g[i], expected,
                fmt::format("union {} is dummifying and player {} is {} in v_P{} but gets {} instead of {}", k, i,
                            axiom == AxiomId::DUPP ? "dummifying" : "nullifying", k, g[i], expected));
            break;
          }
        }
      }
      break;
    }
    case AxiomId::QGP: {
      const std::size_t m = partition.union_count();
      const ExplicitGame q = quotient_game(game, partition);
      const GameSummary sq = summary_from_explicit(q, Partition::singletons(m));
      if (!value_in_domain(value, sq)) return result;
      const Allocation gq = compute_value(value, sq);
      result.qualifying = 1;
      for (std::size_t k = 0; k < m; ++k) {
        const double sk = g.sum_over(partition.members(k));
        if (!approx_equal(sk, gq[k])) {
          result.violation = make_witness(game, partition, nullptr, {k}, sk, gq[k],
                                          fmt::format("union {} receives {} but the quotient game gives {}", k,
                                                      sk, gq[k]));
          break;
        }
      }
      break;
    }
    case AxiomId::COALITIONAL: break;  // handled above
  }
  return result;
}

bool replay_witness(const ValueSpec& value, AxiomId axiom, const Witness& witness) {
  const ExplicitGame* other = witness.other ? &*witness.other : nullptr;
  const InstanceResult again = evaluate_axiom(value, axiom, witness.game, witness.partition, other);
  if (!again.violation) return false;
  const Witness& w = *again.violation;
  return w.subject == witness.subject && approx_equal(w.observed, witness.observed) &&
         approx_equal(w.expected, witness.expected);
}

// Random tier ----------------------------------------------------------------

TrialConfig generate_trial(const ValueSpec& value, AxiomId axiom, const GeneratorConfig& gen,
                           std::uint64_t seed, std::uint64_t index) {
  if (gen.n_min < 1 || gen.n_min > gen.n_max) throw ConfigError("generator needs 1 <= n_min <= n_max");
  auto rng = make_engine(seed, static_cast<std::uint64_t>(axiom) + 1, index);

  const std::size_t min_size = std::max(gen.min_union_size, needs_paired_unions(value) ? std::size_t{2} : 1);
  std::uniform_int_distribution<std::size_t> pick_n(gen.n_min, gen.n_max);
  const std::size_t n = std::max(pick_n(rng), min_size);

  WorthRange range = gen.worths;
  if (gen.mix_reals && index % 3 == 2) range.integral = false;
  static constexpr GameStructure kStructures[] = {GameStructure::Generic, GameStructure::Additive,
                                                  GameStructure::ZeroSingleton, GameStructure::Dirac};
  const GameStructure structure = kStructures[index % 4];

  ExplicitGame game = random_game(n, range, structure, rng);
  Partition p = random_partition(n, rng, min_size);
  std::optional<ExplicitGame> other;
  const std::size_t m = p.union_count();

  switch (axiom) {
    case AxiomId::EFF:
    case AxiomId::QGP:
    case AxiomId::COALITIONAL: break;
    case AxiomId::ADD: other = random_game(n, range, kStructures[(index / 4) % 4], rng); break;
    case AxiomId::SWU: {
      std::vector<std::size_t> wide;
      for (std::size_t k = 0; k < m; ++k) {
        if (p.union_size(k) >= 2) wide.push_back(k);
      }
      if (wide.empty()) break;
      auto members = p.members(pick(wide, rng));
      std::shuffle(members.begin(), members.end(), rng);
      game = plant_indistinguishable(game, members[0], members[1]);
      break;
    }
    case AxiomId::SAU:
    case AxiomId::WSAU: {
      if (axiom == AxiomId::WSAU) game = zero_normalize(game);
      if (m < 2) break;
      std::size_t k = pick_index(m, rng);
      std::size_t l = pick_index(m - 1, rng);
      if (l >= k) ++l;
      // Copy from a singleton union so planted worths keep v(j) = 0.
      if (axiom == AxiomId::WSAU && p.union_size(l) == 1) std::swap(k, l);
      game = plant_indistinguishable_unions(game, p, k, l);
      break;
    }
    case AxiomId::NPP: game = plant_nullifying(game, pick_index(n, rng)); break;
    case AxiomId::DPP: game = plant_dummifying(game, pick_index(n, rng)); break;
    case AxiomId::DUPP:
    case AxiomId::DUNPP: {
      const std::size_t k = pick_index(m, rng);
      const PlayerId i = pick(p.members(k), rng);
      game = axiom == AxiomId::DUPP ? plant_dummifying_within(game, p, k, i)
                                    : plant_nullifying_within(game, p, k, i);
      game = plant_dummifying_union(game, p, k);
      break;
    }
  }
  return {std::move(game), std::move(other), std::move(p)};
}

// Checks ---------------------------------------------------------------------

CheckReport check_axiom(const ValueSpec& value, AxiomId axiom, const CheckConfig& config) {
  if (config.budget == 0) throw ConfigError("check budget must be positive");
  if (axiom == AxiomId::COALITIONAL && !coalitional_base(value.kind())) {
    throw ConfigError(fmt::format("COALITIONAL does not apply to {}", value.label()));
  }

  CheckReport report(value, axiom);
  report.seed = config.seed;

  const auto record = [&](const InstanceResult& r, const char* tier, bool random) {
    if (r.qualifying == 0) {
      ++report.vacuous_trials;
      return false;
    }
    if (random) {
      ++report.trials_run;
    } else {
      ++report.exhaustive_configs;
    }
    if (r.violation) {
      report.outcome = Outcome::Violated;
      report.witness = r.violation;
      report.witness_tier = tier;
      return true;
    }
    return false;
  };

  const bool coalitional = axiom == AxiomId::COALITIONAL;
  const auto exhaustive_tier = [&](std::size_t n, int lo, int hi, std::uint64_t cap, const char* tier) {
    if (axiom == AxiomId::ADD) {
      return walk_small_pairs(value, n, lo, hi, cap, [&](const InstanceResult& r) { return record(r, tier, false); });
    }
    return walk_small_games(n, lo, hi, cap, coalitional, [&](const ExplicitGame& g, const Partition& p) {
      return record(evaluate_axiom(value, axiom, g, p), tier, false);
    });
  };

  constexpr std::uint64_t kNoCap = ~std::uint64_t{0};
  if (config.exhaustive || config.search) {
    if (exhaustive_tier(3, -1, 1, kNoCap, "exhaustive-n3")) return report;
  }
  if (config.search && axiom != AxiomId::ADD) {
    if (exhaustive_tier(3, -2, 2, kNoCap, "exhaustive-n3-wide")) return report;
    if (exhaustive_tier(4, -1, 1, config.n4_cap, "exhaustive-n4")) return report;
  }

  const std::uint64_t max_attempts = static_cast<std::uint64_t>(config.budget) * kAttemptsPerTrial;
  for (std::uint64_t t = 0; t < max_attempts && report.trials_run < config.budget; ++t) {
    const TrialConfig trial = generate_trial(value, axiom, config.generator, config.seed, t);
    const ExplicitGame* other = trial.other ? &*trial.other : nullptr;
    if (record(evaluate_axiom(value, axiom, trial.game, trial.partition, other), "random", true)) return report;
  }

  if (config.search) {
    report.outcome = Outcome::Inconclusive;
    report.note = "no violation found in any search tier";
  } else if (report.trials_run + report.exhaustive_configs == 0) {
    report.outcome = Outcome::Vacuous;
    report.note = fmt::format("no qualifying configuration in {} attempts", report.vacuous_trials);
  } else {
    report.outcome = Outcome::Holds;
    if (report.trials_run < config.budget) {
      report.note = fmt::format("only {} of {} random trials were non-vacuous", report.trials_run, config.budget);
    }
  }
  return report;
}

std::vector<CheckReport> independence_suite(int theorem, std::size_t budget, std::uint64_t seed) {
  std::vector<AxiomId> axioms{AxiomId::EFF};
  for (AxiomId a : theorem_axioms(theorem)) axioms.push_back(a);

  std::vector<CheckReport> out;
  for (const VariantInfo& info : variant_catalog()) {
    if (info.id.theorem != theorem) continue;
    for (AxiomId a : axioms) {
      CheckConfig config;
      config.budget = budget;
      config.seed = seed;
      config.search = a == info.excluded;
      CheckReport r = check_axiom(ValueSpec(info.id), a, config);
      r.expect = a == info.excluded ? Expectation::Violation : Expectation::Hold;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckReport> characterization_suite(std::size_t budget, std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (int theorem = 1; theorem <= 4; ++theorem) {
    const ValueSpec value(theorem_value(theorem));
    std::vector<AxiomId> axioms{AxiomId::EFF};
    for (AxiomId a : theorem_axioms(theorem)) axioms.push_back(a);
    axioms.push_back(AxiomId::QGP);
    axioms.push_back(AxiomId::COALITIONAL);
    for (AxiomId a : axioms) {
      const bool negative = value.kind() == ValueKind::ESD3U && a == AxiomId::QGP;
      CheckConfig config;
      config.budget = budget;
      config.seed = seed;
      config.exhaustive = true;
      config.search = negative;
      CheckReport r = check_axiom(value, a, config);
      r.expect = negative ? Expectation::Violation : Expectation::Hold;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace egal
