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

#include "egal/game.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace egal {

namespace {

void require_explicit_size(std::size_t n) {
  if (n == 0) throw SizeMismatch("an explicit game needs at least one player");
  if (n > kMaxExplicitPlayers) {
    throw SizeMismatch(fmt::format("explicit games are limited to {} players (got {})",
                                   kMaxExplicitPlayers, n));
  }
}

void require_same_size(const ExplicitGame& a, const ExplicitGame& b) {
  if (a.player_count() != b.player_count()) {
    throw SizeMismatch(fmt::format("games have {} and {} players", a.player_count(),
                                   b.player_count()));
  }
}

void require_matching_partition(const ExplicitGame& g, const Partition& p) {
  if (g.player_count() != p.player_count()) {
    throw PartitionMismatch(fmt::format("partition covers {} players but the game has {}",
                                        p.player_count(), g.player_count()));
  }
}

// Worth comparison used by the classifiers: exact on integral games.
struct WorthEq {
  bool exact;
  bool operator()(double a, double b) const { return exact ? a == b : approx_equal(a, b); }
};

}  // namespace

bool approx_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

// Coalition ------------------------------------------------------------------

Coalition Coalition::of(std::initializer_list<PlayerId> members) {
  return of(std::span<const PlayerId>(members.begin(), members.size()));
}

Coalition Coalition::of(std::span<const PlayerId> members) {
  Mask bits = 0;
  for (PlayerId i : members) {
    if (i >= 32) throw SizeMismatch(fmt::format("player {} does not fit a coalition bitmask", i));
    bits |= Mask{1} << i;
  }
  return Coalition(bits);
}

std::vector<PlayerId> Coalition::members() const {
  std::vector<PlayerId> out;
  out.reserve(size());
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<PlayerId>(std::countr_zero(b)));
  return out;
}

std::string Coalition::to_string() const {
  return fmt::format("{{{}}}", fmt::join(members(), ","));
}

// ExplicitGame ---------------------------------------------------------------

ExplicitGame::ExplicitGame(std::size_t n) : n_(n) {
  require_explicit_size(n);
  worths_.assign(std::size_t{1} << n, 0.0);
}

ExplicitGame::ExplicitGame(std::size_t n, std::vector<double> worths)
    : n_(n), worths_(std::move(worths)) {
  require_explicit_size(n);
  if (worths_.size() != (std::size_t{1} << n)) {
    throw SizeMismatch(fmt::format("expected {} worths for {} players, got {}",
                                   std::size_t{1} << n, n, worths_.size()));
  }
  if (worths_[0] != 0.0) throw Error("the empty coalition must have worth 0");
}

bool ExplicitGame::is_integral() const {
  return std::all_of(worths_.begin(), worths_.end(),
                     [](double w) { return std::isfinite(w) && w == std::trunc(w); });
}

// Partition ------------------------------------------------------------------

Partition::Partition(std::size_t n, std::vector<std::vector<PlayerId>> unions)
    : n_(n), unions_(std::move(unions)), owner_(n, static_cast<std::size_t>(-1)) {
  if (n == 0) throw PartitionMismatch("a partition needs at least one player");
  for (std::size_t k = 0; k < unions_.size(); ++k) {
    auto& u = unions_[k];
    if (u.empty()) throw PartitionMismatch(fmt::format("union {} is empty", k));
    std::sort(u.begin(), u.end());
    for (PlayerId i : u) {
      if (i >= n) throw PartitionMismatch(fmt::format("union {} names player {} >= n = {}", k, i, n));
      if (owner_[i] != static_cast<std::size_t>(-1)) {
        throw PartitionMismatch(fmt::format("player {} appears in unions {} and {}", i, owner_[i], k));
      }
      owner_[i] = k;
    }
  }
  for (PlayerId i = 0; i < n; ++i) {
    if (owner_[i] == static_cast<std::size_t>(-1)) {
      throw PartitionMismatch(fmt::format("player {} belongs to no union", i));
    }
  }
}

Partition Partition::from_coalitions(std::size_t n, std::span<const Coalition> unions) {
  std::vector<std::vector<PlayerId>> u;
  u.reserve(unions.size());
  for (Coalition c : unions) u.push_back(c.members());
  return Partition(n, std::move(u));
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<PlayerId>> u(n);
  for (PlayerId i = 0; i < n; ++i) u[i] = {i};
  return Partition(n, std::move(u));
}

Partition Partition::grand(std::size_t n) {
  std::vector<PlayerId> all(n);
  std::iota(all.begin(), all.end(), PlayerId{0});
  return Partition(n, {std::move(all)});
}

Coalition Partition::coalition(std::size_t k) const {
  if (n_ > kMaxExplicitPlayers) throw SizeMismatch("partition too large for a coalition bitmask");
  return Coalition::of(std::span<const PlayerId>(unions_[k]));
}

Coalition Partition::expand(Coalition unions) const {
  Coalition out;
  for (std::size_t r : unions.members()) out = out | coalition(r);
  return out;
}

std::string Partition::to_string() const {
  std::vector<std::string> parts;
  for (const auto& u : unions_) parts.push_back(fmt::format("{{{}}}", fmt::join(u, ",")));
  return fmt::format("{{{}}}", fmt::join(parts, ","));
}

// GameSummary / Allocation ---------------------------------------------------

void GameSummary::validate() const {
  if (singleton.size() != partition.player_count()) {
    throw SizeMismatch(fmt::format("summary has {} singleton worths but the partition covers {} players",
                                   singleton.size(), partition.player_count()));
  }
  if (union_worth.size() != partition.union_count()) {
    throw SizeMismatch(fmt::format("summary has {} union worths but the partition has {} unions",
                                   union_worth.size(), partition.union_count()));
  }
}

double Allocation::sum() const { return std::accumulate(shares.begin(), shares.end(), 0.0); }

double Allocation::sum_over(std::span<const PlayerId> players) const {
  double s = 0.0;
  for (PlayerId i : players) s += shares[i];
  return s;
}

// Transformations ------------------------------------------------------------

ExplicitGame quotient_game(const ExplicitGame& g, const Partition& p) {
  require_matching_partition(g, p);
  const std::size_t m = p.union_count();
  std::vector<Coalition> unions(m);
  for (std::size_t k = 0; k < m; ++k) unions[k] = p.coalition(k);
  return ExplicitGame::from_function(m, [&](Coalition r) {
    Coalition s;
    for (std::size_t k : r.members()) s = s | unions[k];
    return g(s);
  });
}

RestrictedGame restrict_game(const ExplicitGame& g, Coalition c) {
  if (c.empty()) throw DegenerateCoalition("cannot restrict a game to the empty coalition");
  if (!c.is_subset_of(g.grand_coalition())) {
    throw SizeMismatch(fmt::format("coalition {} is not a subset of the player set", c.to_string()));
  }
  std::vector<PlayerId> mapping = c.members();
  ExplicitGame sub = ExplicitGame::from_function(mapping.size(), [&](Coalition s) {
    Coalition image;
    for (PlayerId j : s.members()) image = image.with(mapping[j]);
    return g(image);
  });
  return {std::move(sub), std::move(mapping)};
}

ExplicitGame zero_normalize(const ExplicitGame& g) {
  return ExplicitGame::from_function(g.player_count(), [&](Coalition s) {
    double w = g(s);
    for (PlayerId i : s.members()) w -= g.singleton_worth(i);
    return w;
  });
}

ExplicitGame additive_part(const ExplicitGame& g) {
  return ExplicitGame::from_function(g.player_count(), [&](Coalition s) {
    double w = 0.0;
    for (PlayerId i : s.members()) w += g.singleton_worth(i);
    return w;
  });
}

ExplicitGame scaled_dirac(std::size_t n, Coalition t, double alpha) {
  if (t.empty()) throw DegenerateCoalition("a Dirac game needs a nonempty carrier");
  ExplicitGame g(n);
  if (!t.is_subset_of(g.grand_coalition())) {
    throw SizeMismatch(fmt::format("coalition {} is not a subset of the player set", t.to_string()));
  }
  return ExplicitGame::from_function(n, [&](Coalition s) { return s == t ? alpha : 0.0; });
}

std::vector<std::pair<Coalition, double>> dirac_decompose(const ExplicitGame& g) {
  std::vector<std::pair<Coalition, double>> out;
  const auto w = g.worths();
  for (std::size_t s = 1; s < w.size(); ++s) {
    if (w[s] != 0.0) out.emplace_back(Coalition(static_cast<Coalition::Mask>(s)), w[s]);
  }
  return out;
}

ExplicitGame add_games(const ExplicitGame& a, const ExplicitGame& b) {
  require_same_size(a, b);
  return ExplicitGame::from_function(a.player_count(), [&](Coalition s) { return a(s) + b(s); });
}

ExplicitGame scale_game(const ExplicitGame& a, double c) {
  return ExplicitGame::from_function(a.player_count(), [&](Coalition s) { return c * a(s); });
}

ExplicitGame union_floor_game(const ExplicitGame& g, const Partition& p) {
  require_matching_partition(g, p);
  const std::size_t m = p.union_count();
  std::vector<Coalition> unions(m);
  std::vector<double> union_worths(m);
  for (std::size_t k = 0; k < m; ++k) {
    unions[k] = p.coalition(k);
    union_worths[k] = g(unions[k]);
  }
  return ExplicitGame::from_function(g.player_count(), [&](Coalition s) {
    double w = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (unions[k].is_subset_of(s)) w += union_worths[k];
    }
    return w;
  });
}

GameSummary summary_from_explicit(const ExplicitGame& g, const Partition& p) {
  require_matching_partition(g, p);
  GameSummary s{std::vector<double>(g.player_count()), p,
                std::vector<double>(p.union_count()), g.grand_worth()};
  for (PlayerId i = 0; i < g.player_count(); ++i) s.singleton[i] = g.singleton_worth(i);
  for (std::size_t k = 0; k < p.union_count(); ++k) s.union_worth[k] = g(p.coalition(k));
  return s;
}

// Classifiers ----------------------------------------------------------------

PlayerClass classify_player(const ExplicitGame& g, PlayerId i) {
  if (i >= g.player_count()) throw SizeMismatch(fmt::format("player {} out of range", i));
  const WorthEq eq{g.is_integral()};
  PlayerClass c{true, true};
  for_each_subset(g.grand_coalition().without(i), [&](Coalition s) {
    const Coalition si = s.with(i);
    const double w = g(si);
    if (c.nullifying && !eq(w, 0.0)) c.nullifying = false;
    if (c.dummifying) {
      double additive = 0.0;
      for (PlayerId j : si.members()) additive += g.singleton_worth(j);
      if (!eq(w, additive)) c.dummifying = false;
    }
  });
  return c;
}

bool classify_pair(const ExplicitGame& g, PlayerId i, PlayerId j) {
  if (i >= g.player_count() || j >= g.player_count()) {
    throw SizeMismatch(fmt::format("pair ({}, {}) out of range", i, j));
  }
  if (i == j) throw Error("classify_pair needs two distinct players");
  const WorthEq eq{g.is_integral()};
  bool same = true;
  for_each_subset(g.grand_coalition().without(i).without(j), [&](Coalition s) {
    if (same && !eq(g(s.with(i)), g(s.with(j)))) same = false;
  });
  return same;
}

bool is_dummifying_union(const ExplicitGame& g, const Partition& p, std::size_t k) {
  if (k >= p.union_count()) throw SizeMismatch(fmt::format("union {} out of range", k));
  return classify_player(quotient_game(g, p), k).dummifying;
}

}  // namespace egal
