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

#include "egal/generators.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

namespace egal {

namespace {

void require_generated_size(std::size_t n) {
  if (n < 1 || n > kMaxGeneratedPlayers) {
    throw ConfigError(fmt::format("generated games need 1 <= n <= {} (got {})", kMaxGeneratedPlayers, n));
  }
}

double draw_worth(const WorthRange& range, std::mt19937_64& rng) {
  if (range.integral) {
    std::uniform_int_distribution<long long> d(static_cast<long long>(range.lo),
                                               static_cast<long long>(range.hi));
    return static_cast<double>(d(rng));
  }
  std::uniform_real_distribution<double> d(range.lo, range.hi);
  return d(rng);
}

std::vector<double> copy_worths(const ExplicitGame& g) {
  return {g.worths().begin(), g.worths().end()};
}

}  // namespace

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

ExplicitGame random_game(std::size_t n, const WorthRange& range, GameStructure structure,
                         std::mt19937_64& rng) {
  require_generated_size(n);
  if (range.lo > range.hi) throw ConfigError("worth range has lo > hi");
  switch (structure) {
    case GameStructure::Generic:
      return ExplicitGame::from_function(n, [&](Coalition) { return draw_worth(range, rng); });
    case GameStructure::ZeroSingleton:
      return ExplicitGame::from_function(
          n, [&](Coalition s) { return s.size() == 1 ? 0.0 : draw_worth(range, rng); });
    case GameStructure::Additive: {
      std::vector<double> single(n);
      for (auto& x : single) x = draw_worth(range, rng);
      return ExplicitGame::from_function(n, [&](Coalition s) {
        double w = 0.0;
        for (PlayerId i : s.members()) w += single[i];
        return w;
      });
    }
    case GameStructure::Dirac: {
      const Coalition::Mask full = Coalition::grand(n).bits();
      Coalition t = Coalition::grand(n);
      if (n > 1) {
        std::uniform_int_distribution<Coalition::Mask> d(1, full - 1);
        t = Coalition(d(rng));
      }
      double alpha = draw_worth(range, rng);
      if (alpha == 0.0) alpha = range.hi != 0.0 ? range.hi : 1.0;
      return scaled_dirac(n, t, alpha);
    }
  }
  throw ConfigError("unknown game structure");
}

ExplicitGame random_game(std::size_t n, const WorthRange& range, GameStructure structure,
                         std::uint64_t seed) {
  auto rng = make_engine(seed);
  return random_game(n, range, structure, rng);
}

Partition random_partition(std::size_t n, std::mt19937_64& rng, std::size_t min_union_size) {
  if (n == 0) throw ConfigError("a partition needs at least one player");
  if (min_union_size == 0 || min_union_size > n) {
    throw ConfigError(fmt::format("cannot split {} players into unions of at least {}", n, min_union_size));
  }
  std::uniform_int_distribution<std::size_t> pick_m(1, n / min_union_size);
  const std::size_t m = pick_m(rng);

  std::vector<PlayerId> order(n);
  std::iota(order.begin(), order.end(), PlayerId{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<PlayerId>> unions(m);
  std::size_t next = 0;
  for (auto& u : unions) {
    for (std::size_t c = 0; c < min_union_size; ++c) u.push_back(order[next++]);
  }
  std::uniform_int_distribution<std::size_t> pick_union(0, m - 1);
  for (; next < n; ++next) unions[pick_union(rng)].push_back(order[next]);
  // Canonical order: unions sorted by their smallest member.
  for (auto& u : unions) std::sort(u.begin(), u.end());
  std::sort(unions.begin(), unions.end());
  return Partition(n, std::move(unions));
}

Partition random_partition(std::size_t n, std::uint64_t seed, std::size_t min_union_size) {
  auto rng = make_engine(seed);
  return random_partition(n, rng, min_union_size);
}

std::vector<Partition> all_partitions(std::size_t n) {
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<Partition> out;
  std::vector<std::size_t> a(n, 0);
  auto emit = [&] {
    const std::size_t m = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<PlayerId>> unions(m);
    for (PlayerId i = 0; i < n; ++i) unions[a[i]].push_back(i);
    out.emplace_back(n, std::move(unions));
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t max_label) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t label = 0; label <= max_label + 1; ++label) {
      a[i] = label;
      self(self, i + 1, std::max(max_label, label));
    }
  };
  if (n == 0) return out;
  a[0] = 0;
  rec(rec, 1, 0);
  return out;
}

// Planting -------------------------------------------------------------------

ExplicitGame plant_nullifying(const ExplicitGame& g, PlayerId i) {
  auto w = copy_worths(g);
  for_each_subset(g.grand_coalition().without(i), [&](Coalition s) { w[s.with(i).bits()] = 0.0; });
  return ExplicitGame(g.player_count(), std::move(w));
}

ExplicitGame plant_dummifying(const ExplicitGame& g, PlayerId i) {
  auto w = copy_worths(g);
  for_each_subset(g.grand_coalition().without(i), [&](Coalition s) {
    if (s.empty()) return;
    double additive = 0.0;
    for (PlayerId j : s.with(i).members()) additive += g.singleton_worth(j);
    w[s.with(i).bits()] = additive;
  });
  return ExplicitGame(g.player_count(), std::move(w));
}

ExplicitGame plant_indistinguishable(const ExplicitGame& g, PlayerId i, PlayerId j) {
  auto w = copy_worths(g);
  for_each_subset(g.grand_coalition().without(i).without(j),
                  [&](Coalition s) { w[s.with(j).bits()] = g(s.with(i)); });
  return ExplicitGame(g.player_count(), std::move(w));
}

ExplicitGame plant_indistinguishable_unions(const ExplicitGame& g, const Partition& p, std::size_t k,
                                            std::size_t l) {
  auto w = copy_worths(g);
  const Coalition others = Coalition::grand(p.union_count()).without(k).without(l);
  const Coalition pk = p.coalition(k);
  const Coalition pl = p.coalition(l);
  for_each_subset(others, [&](Coalition r) {
    const Coalition base = p.expand(r);
    w[(base | pl).bits()] = g(base | pk);
  });
  return ExplicitGame(g.player_count(), std::move(w));
}

ExplicitGame plant_dummifying_union(const ExplicitGame& g, const Partition& p, std::size_t k) {
  auto w = copy_worths(g);
  const std::size_t m = p.union_count();
  std::vector<double> union_worth(m);
  for (std::size_t r = 0; r < m; ++r) union_worth[r] = g(p.coalition(r));
  for_each_subset(Coalition::grand(m).without(k), [&](Coalition r) {
    if (r.empty()) return;
    double additive = union_worth[k];
    for (std::size_t u : r.members()) additive += union_worth[u];
    w[(p.expand(r) | p.coalition(k)).bits()] = additive;
  });
  return ExplicitGame(g.player_count(), std::move(w));
}

ExplicitGame plant_nullifying_within(const ExplicitGame& g, const Partition& p, std::size_t k, PlayerId i) {
  auto w = copy_worths(g);
  for_each_subset(p.coalition(k).without(i), [&](Coalition s) { w[s.with(i).bits()] = 0.0; });
  return ExplicitGame(g.player_count(), std::move(w));
}

ExplicitGame plant_dummifying_within(const ExplicitGame& g, const Partition& p, std::size_t k, PlayerId i) {
  auto w = copy_worths(g);
  for_each_subset(p.coalition(k).without(i), [&](Coalition s) {
    if (s.empty()) return;
    double additive = 0.0;
    for (PlayerId j : s.with(i).members()) additive += g.singleton_worth(j);
    w[s.with(i).bits()] = additive;
  });
  return ExplicitGame(g.player_count(), std::move(w));
}

// SmallIntegerGames ----------------------------------------------------------

SmallIntegerGames::SmallIntegerGames(std::size_t n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {
  if (n < 1 || n > 4) throw ConfigError("exhaustive enumeration supports 1 <= n <= 4");
  if (lo > hi) throw ConfigError("worth range has lo > hi");
  const std::uint64_t base = static_cast<std::uint64_t>(hi - lo + 1);
  count_ = 1;
  for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) count_ *= base;
}

ExplicitGame SmallIntegerGames::game(std::uint64_t index) const {
  const std::uint64_t base = static_cast<std::uint64_t>(hi_ - lo_ + 1);
  std::vector<double> w(std::size_t{1} << n_, 0.0);
  for (std::size_t s = w.size() - 1; s >= 1; --s) {
    w[s] = static_cast<double>(lo_ + static_cast<int>(index % base));
    index /= base;
  }
  return ExplicitGame(n_, std::move(w));
}

}  // namespace egal
