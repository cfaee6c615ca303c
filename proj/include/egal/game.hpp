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
 * \file egal/game.hpp
 *
 * \brief TU-games, a priori union structures and the game transformations
 *  (quotient, restriction, zero-normalization, basis decomposition) that the
 *  allocation values and the axiom checks are built on.
 *
 * Explicit games store all 2^n worths in a dense array indexed by the
 * coalition bitmask, so they are limited to kMaxExplicitPlayers players.
 * Large games (e.g. one player per quota unit) go through GameSummary.
 */

#ifndef EGAL_GAME_HPP
#define EGAL_GAME_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "egal/errors.hpp"

namespace egal {

inline constexpr std::size_t kMaxExplicitPlayers = 24;

/// Relative tolerance used by every floating-point comparison in the library.
inline constexpr double kRelTol = 1e-9;

using PlayerId = std::size_t;

/// |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(double a, double b, double tol = kRelTol);

/// A set of players of an explicit game, stored as a bitmask.
class Coalition {
 public:
  using Mask = std::uint32_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<PlayerId> members);
  static Coalition of(std::span<const PlayerId> members);
  static constexpr Coalition grand(std::size_t n) {
    return Coalition(n >= 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << n) - 1));
  }
  static constexpr Coalition singleton(PlayerId i) { return Coalition(Mask{1} << i); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(PlayerId i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr Coalition with(PlayerId i) const { return Coalition(bits_ | (Mask{1} << i)); }
  constexpr Coalition without(PlayerId i) const { return Coalition(bits_ & ~(Mask{1} << i)); }

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.bits_ & b.bits_); }
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

  std::vector<PlayerId> members() const;
  std::string to_string() const;

 private:
  Mask bits_ = 0;
};

/// Calls f(S) for every subset S of `within`, including the empty set.
template <typename F>
void for_each_subset(Coalition within, F&& f) {
  const Coalition::Mask all = within.bits();
  Coalition::Mask s = 0;
  while (true) {
    f(Coalition(s));
    if (s == all) break;
    s = (s - all) & all;
  }
}

/// A TU-game (N, v) with every worth stored explicitly.
class ExplicitGame {
 public:
  /// The zero game on n players.
  explicit ExplicitGame(std::size_t n);
  /// `worths[S.bits()]` is v(S); requires worths.size() == 2^n and worths[0] == 0.
  ExplicitGame(std::size_t n, std::vector<double> worths);

  template <typename F>
  static ExplicitGame from_function(std::size_t n, F&& f) {
    ExplicitGame g(n);
    for (std::size_t s = 1; s < g.worths_.size(); ++s) {
      g.worths_[s] = f(Coalition(static_cast<Coalition::Mask>(s)));
    }
    return g;
  }

  std::size_t player_count() const { return n_; }
  Coalition grand_coalition() const { return Coalition::grand(n_); }

  double worth(Coalition s) const { return worths_[s.bits()]; }
  double operator()(Coalition s) const { return worths_[s.bits()]; }
  double singleton_worth(PlayerId i) const { return worths_[Coalition::singleton(i).bits()]; }
  double grand_worth() const { return worths_.back(); }

  std::span<const double> worths() const { return worths_; }

  /// True when every worth is an integer; classifiers then compare exactly.
  bool is_integral() const;

  friend bool operator==(const ExplicitGame&, const ExplicitGame&) = default;

 private:
  std::size_t n_;
  std::vector<double> worths_;
};

/// An a priori union structure P = {P_1, ..., P_m} of {0, ..., n-1}.
///
/// Members of each union are kept sorted; the order of the unions is the
/// order given at construction. Works for any n (no bitmask limit).
class Partition {
 public:
  Partition(std::size_t n, std::vector<std::vector<PlayerId>> unions);

  static Partition from_coalitions(std::size_t n, std::span<const Coalition> unions);
  /// P^n = {{0}, {1}, ..., {n-1}}.
  static Partition singletons(std::size_t n);
  /// {N}.
  static Partition grand(std::size_t n);

  std::size_t player_count() const { return n_; }
  std::size_t union_count() const { return unions_.size(); }
  std::size_t union_size(std::size_t k) const { return unions_[k].size(); }
  const std::vector<PlayerId>& members(std::size_t k) const { return unions_[k]; }
  const std::vector<std::vector<PlayerId>>& unions() const { return unions_; }
  /// Index k of the union containing player i.
  std::size_t union_of(PlayerId i) const { return owner_[i]; }
  /// P_k as a bitmask; requires n <= kMaxExplicitPlayers.
  Coalition coalition(std::size_t k) const;
  /// Union of P_r over r in `unions` (a coalition of the quotient game).
  Coalition expand(Coalition unions) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.unions_ == b.unions_;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<PlayerId>> unions_;
  std::vector<std::size_t> owner_;
};

/// The inputs every union value needs: v(i), v(P_k) and v(N).
struct GameSummary {
  std::vector<double> singleton;
  Partition partition;
  std::vector<double> union_worth;
  double total = 0.0;

  std::size_t player_count() const { return singleton.size(); }
  std::size_t union_count() const { return union_worth.size(); }

  /// Throws SizeMismatch when the field lengths disagree with n and m.
  void validate() const;
};

/// A payoff (or cost share) per player.
struct Allocation {
  std::vector<double> shares;

  std::size_t size() const { return shares.size(); }
  double operator[](std::size_t i) const { return shares[i]; }
  double sum() const;
  /// Sum of the shares of the given players.
  double sum_over(std::span<const PlayerId> players) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// v/P: the game among unions, (v/P)(R) = v(union of P_r, r in R).
ExplicitGame quotient_game(const ExplicitGame& g, const Partition& p);

struct RestrictedGame {
  ExplicitGame game;
  /// mapping[j] = original player id of restricted player j.
  std::vector<PlayerId> mapping;
};

/// v_C: the game on the players of C, densely reindexed in increasing order.
RestrictedGame restrict_game(const ExplicitGame& g, Coalition c);

/// v^0(S) = v(S) - sum_{i in S} v(i).
ExplicitGame zero_normalize(const ExplicitGame& g);

/// v^a(S) = sum_{i in S} v(i).
ExplicitGame additive_part(const ExplicitGame& g);

/// e_T^alpha: worth alpha on T and 0 elsewhere.
ExplicitGame scaled_dirac(std::size_t n, Coalition t, double alpha);

/// The (T, v(T)) pairs with T nonempty and v(T) != 0; their scaled Dirac
/// games sum back to g.
std::vector<std::pair<Coalition, double>> dirac_decompose(const ExplicitGame& g);

ExplicitGame add_games(const ExplicitGame& a, const ExplicitGame& b);
ExplicitGame scale_game(const ExplicitGame& a, double c);

/// v^1(S) = sum of v(P_l) over the unions P_l contained in S.
ExplicitGame union_floor_game(const ExplicitGame& g, const Partition& p);

GameSummary summary_from_explicit(const ExplicitGame& g, const Partition& p);

struct PlayerClass {
  bool nullifying = false;
  bool dummifying = false;
};

/// Exhaustive check over every S subset of N \ {i}.
PlayerClass classify_player(const ExplicitGame& g, PlayerId i);

/// True when v(S u i) = v(S u j) for every S subset of N \ {i, j}.
bool classify_pair(const ExplicitGame& g, PlayerId i, PlayerId j);

/// True when union k is a dummifying player of the quotient game.
bool is_dummifying_union(const ExplicitGame& g, const Partition& p, std::size_t k);

}  // namespace egal

#endif  // EGAL_GAME_HPP
