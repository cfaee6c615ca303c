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
 * \file egal/axioms.hpp
 *
 * \brief Finite verification of the axioms of values for games with a priori
 *  unions.
 *
 * An axiom is universally quantified over games, partitions and players; the
 * checks evaluate it on
 *  - an exhaustive tier: every game on 3 players with worths in {-1, 0, 1},
 *    under every partition (pairs of such games for ADD), and
 *  - a random tier: seeded games with planted structure so that the axiom's
 *    hypothesis (nullifying player, dummifying union, ...) actually occurs.
 *
 * Witness search walks wider exhaustive tiers (n = 3 with worths in -2..2,
 * then n = 4) before falling back to random real-valued games, so reported
 * witnesses are small and integral whenever possible.
 *
 * A trial is vacuous when no player/pair/union of the sampled game satisfies
 * the hypothesis, or the game lies outside the value's domain. Vacuous trials
 * never count as evidence.
 */

#ifndef EGAL_AXIOMS_HPP
#define EGAL_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "egal/axiom_id.hpp"
#include "egal/game.hpp"
#include "egal/generators.hpp"
#include "egal/values.hpp"

namespace egal {

/// A concrete configuration on which an axiom fails.
struct Witness {
  ExplicitGame game;
  /// Second game of an ADD pair.
  std::optional<ExplicitGame> other;
  Partition partition;
  /// Player (NPP, DPP, EFF: empty), pair (SWU), union pair (SAU), union and
  /// player (DUPP, DUNPP), union (QGP) or player (ADD, COALITIONAL).
  std::vector<std::size_t> subject;
  double observed = 0.0;
  double expected = 0.0;
  std::string detail;
};

struct InstanceResult {
  /// Number of qualifying players/pairs/unions (0 means vacuous).
  std::size_t qualifying = 0;
  std::optional<Witness> violation;
};

/// Evaluates one axiom on one configuration and returns the first violation
/// in a fixed scan order. `other` is required for ADD and ignored otherwise.
InstanceResult evaluate_axiom(const ValueSpec& value, AxiomId axiom, const ExplicitGame& game,
                              const Partition& partition, const ExplicitGame* other = nullptr);

/// True when re-evaluating the witness reproduces the same violation
/// (same subject, same observed and expected values).
bool replay_witness(const ValueSpec& value, AxiomId axiom, const Witness& witness);

enum class Outcome { Holds, Violated, Inconclusive, Vacuous };
enum class Expectation { Hold, Violation };

std::string to_string(Outcome o);
std::string to_string(Expectation e);

struct GeneratorConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 6;
  WorthRange worths{-4.0, 4.0, true};
  /// Every third trial uses real-valued worths in the same range.
  bool mix_reals = true;
  std::size_t min_union_size = 1;
};

struct CheckConfig {
  /// Number of non-vacuous random trials.
  std::size_t budget = 1000;
  std::uint64_t seed = 1;
  GeneratorConfig generator;
  /// Run the n = 3, worths {-1, 0, 1} exhaustive tier before the random one.
  bool exhaustive = false;
  /// Witness search: stop at the first violation, walk the wider exhaustive
  /// tiers, and report Inconclusive instead of Holds when nothing is found.
  bool search = false;
  /// Cap on configurations visited in the n = 4 search tier.
  std::uint64_t n4_cap = 2'000'000;
};

struct CheckReport {
  CheckReport(ValueSpec v, AxiomId a) : value(std::move(v)), axiom(a) {}

  ValueSpec value;
  AxiomId axiom;
  Outcome outcome = Outcome::Vacuous;
  std::optional<Witness> witness;
  /// Tier that produced the witness ("exhaustive-n3", "random", ...).
  std::string witness_tier;
  std::size_t trials_run = 0;
  std::size_t vacuous_trials = 0;
  std::uint64_t exhaustive_configs = 0;
  std::uint64_t seed = 0;
  std::optional<Expectation> expect;
  /// Free-form note (e.g. why the check is vacuous).
  std::string note;

  bool meets_expectation() const;
};

/// Throws ConfigError when budget is 0 or the axiom does not apply to the
/// value (COALITIONAL on a value without a classical base).
CheckReport check_axiom(const ValueSpec& value, AxiomId axiom, const CheckConfig& config);

/// Generates the configuration of random trial `index` for the given axiom:
/// a game (and a second game for ADD) with the axiom's hypothesis planted.
struct TrialConfig {
  ExplicitGame game;
  std::optional<ExplicitGame> other;
  Partition partition;
};
TrialConfig generate_trial(const ValueSpec& value, AxiomId axiom, const GeneratorConfig& gen,
                           std::uint64_t seed, std::uint64_t index);

/// For each counterexample item of theorem 1..4: the listed axioms must hold
/// on `budget` random trials and the excluded axiom must yield a witness.
std::vector<CheckReport> independence_suite(int theorem, std::size_t budget, std::uint64_t seed);

/// ED^U, ESD1^U, ESD2^U and ESD3^U against their characterizing axioms plus
/// EFF, QGP and COALITIONAL (QGP expected to fail for ESD3^U), on the
/// exhaustive tier and `budget` random trials each.
std::vector<CheckReport> characterization_suite(std::size_t budget, std::uint64_t seed);

/// True when every report meets its expectation.
bool all_as_expected(const std::vector<CheckReport>& reports);

}  // namespace egal

#endif  // EGAL_AXIOMS_HPP
