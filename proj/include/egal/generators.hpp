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
 * \file egal/generators.hpp
 *
 * \brief Seeded random games and partitions, structure planting, and the
 *  exhaustive small-integer game enumeration used by the axiom checks.
 */

#ifndef EGAL_GENERATORS_HPP
#define EGAL_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "egal/game.hpp"

namespace egal {

inline constexpr std::size_t kMaxGeneratedPlayers = 12;

enum class GameStructure {
  Generic,        ///< every nonempty coalition drawn independently
  ZeroSingleton,  ///< generic with v(i) = 0
  Additive,       ///< v(S) = sum of drawn singleton worths
  Dirac,          ///< e_T^alpha for a random T (proper subset of N when n > 1)
};

struct WorthRange {
  double lo = -4.0;
  double hi = 4.0;
  /// Draw integers in [lo, hi] instead of reals.
  bool integral = true;
};

/// Deterministic engine for (seed, stream, index); used so that trials can be
/// regenerated independently of each other.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0);

ExplicitGame random_game(std::size_t n, const WorthRange& range, GameStructure structure,
                         std::mt19937_64& rng);
ExplicitGame random_game(std::size_t n, const WorthRange& range, GameStructure structure,
                         std::uint64_t seed);

/// A uniformly drawn union count and a random assignment in which every
/// union has at least `min_union_size` members.
Partition random_partition(std::size_t n, std::mt19937_64& rng, std::size_t min_union_size = 1);
Partition random_partition(std::size_t n, std::uint64_t seed, std::size_t min_union_size = 1);

/// Every set partition of {0, ..., n-1}, in a fixed order.
std::vector<Partition> all_partitions(std::size_t n);

// Planting: each returns a copy of g edited so that the named hypothesis holds.

/// v(S) = 0 for every S containing i.
ExplicitGame plant_nullifying(const ExplicitGame& g, PlayerId i);
/// v(S) = sum_{j in S} v(j) for every S containing i.
ExplicitGame plant_dummifying(const ExplicitGame& g, PlayerId i);
/// v(S u j) := v(S u i) for every S avoiding i and j.
ExplicitGame plant_indistinguishable(const ExplicitGame& g, PlayerId i, PlayerId j);
/// Makes unions k and l indistinguishable in v/P by copying the worths of
/// coalitions built on P_k onto the ones built on P_l.
ExplicitGame plant_indistinguishable_unions(const ExplicitGame& g, const Partition& p, std::size_t k,
                                            std::size_t l);
/// Makes union k a dummifying player of v/P.
ExplicitGame plant_dummifying_union(const ExplicitGame& g, const Partition& p, std::size_t k);
/// i becomes nullifying in the restriction v_{P_k}.
ExplicitGame plant_nullifying_within(const ExplicitGame& g, const Partition& p, std::size_t k, PlayerId i);
/// i becomes dummifying in the restriction v_{P_k}.
ExplicitGame plant_dummifying_within(const ExplicitGame& g, const Partition& p, std::size_t k, PlayerId i);

/// All games on n players whose nonempty-coalition worths are integers in
/// [lo, hi], indexed 0 .. count()-1 (the grand coalition varies fastest).
class SmallIntegerGames {
 public:
  SmallIntegerGames(std::size_t n, int lo, int hi);

  std::size_t player_count() const { return n_; }
  std::uint64_t count() const { return count_; }
  ExplicitGame game(std::uint64_t index) const;

 private:
  std::size_t n_;
  int lo_;
  int hi_;
  std::uint64_t count_;
};

}  // namespace egal

#endif  // EGAL_GENERATORS_HPP
