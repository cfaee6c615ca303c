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

#include <cmath>
#include <set>

#include "egal/errors.hpp"
#include "egal/generators.hpp"

using namespace egal;

TEST_SUITE("generators") {
  TEST_CASE("structures") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const std::size_t n = 1 + seed % 6;
      const ExplicitGame z = random_game(n, {}, GameStructure::ZeroSingleton, seed);
      for (PlayerId i = 0; i < n; ++i) CHECK(z.singleton_worth(i) == 0);

      const ExplicitGame a = random_game(n, {}, GameStructure::Additive, seed);
      for (PlayerId i = 0; i < n; ++i) CHECK(classify_player(a, i).dummifying);

      const ExplicitGame d = random_game(n, {}, GameStructure::Dirac, seed);
      const auto carrier = dirac_decompose(d);
      REQUIRE(carrier.size() == 1);
      const Coalition t = carrier[0].first;
      if (n > 1) CHECK(t != Coalition::grand(n));
      for (PlayerId i : (Coalition::grand(n) - t).members()) CHECK(classify_player(d, i).nullifying);
    }
  }

  TEST_CASE("worth ranges") {
    const ExplicitGame g = random_game(5, {-2, 3, true}, GameStructure::Generic, 1);
    for (double x : g.worths()) {
      CHECK(x >= -2);
      CHECK(x <= 3);
      CHECK(x == std::floor(x));
    }
    CHECK_FALSE(random_game(5, {-2, 3, false}, GameStructure::Generic, 1).is_integral());
    CHECK_THROWS_AS(random_game(13, {}, GameStructure::Generic, 1), ConfigError);
    CHECK_THROWS_AS(random_game(3, {2, 1, true}, GameStructure::Generic, 1), ConfigError);
  }

  TEST_CASE("determinism") {
    CHECK(random_game(6, {}, GameStructure::Generic, 42) == random_game(6, {}, GameStructure::Generic, 42));
    CHECK_FALSE(random_game(6, {}, GameStructure::Generic, 42) == random_game(6, {}, GameStructure::Generic, 43));
    CHECK(random_partition(9, 7) == random_partition(9, 7));
    auto a = make_engine(1, 2, 3);
    auto b = make_engine(1, 2, 3);
    auto c = make_engine(1, 2, 4);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }

  TEST_CASE("partitions") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Partition p = random_partition(8, seed, 2);
      for (std::size_t k = 0; k < p.union_count(); ++k) CHECK(p.union_size(k) >= 2);
    }
    CHECK_THROWS_AS(random_partition(3, 1, 4), ConfigError);
    CHECK_THROWS_AS(random_partition(3, 1, 0), ConfigError);

    const std::size_t bell[] = {1, 1, 2, 5, 15, 52};
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto all = all_partitions(n);
      CHECK(all.size() == bell[n]);
      std::set<std::string> distinct;
      for (const auto& p : all) distinct.insert(p.to_string());
      CHECK(distinct.size() == all.size());
    }
  }

  TEST_CASE("planting") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const ExplicitGame g = random_game(5, {-4, 4, seed % 2 == 0}, GameStructure::Generic, seed);
      CHECK(classify_player(plant_nullifying(g, 2), 2).nullifying);
      CHECK(classify_player(plant_dummifying(g, 1), 1).dummifying);
      CHECK(classify_pair(plant_indistinguishable(g, 0, 3), 0, 3));

      const Partition p(5, {{0, 1}, {2}, {3, 4}});
      const ExplicitGame u = plant_indistinguishable_unions(g, p, 0, 2);
      CHECK(classify_pair(quotient_game(u, p), 0, 2));
      CHECK(is_dummifying_union(plant_dummifying_union(g, p, 1), p, 1));

      const ExplicitGame n0 = plant_nullifying_within(g, p, 2, 4);
      CHECK(classify_player(restrict_game(n0, p.coalition(2)).game, 1).nullifying);
      const ExplicitGame d0 = plant_dummifying_within(g, p, 0, 0);
      CHECK(classify_player(restrict_game(d0, p.coalition(0)).game, 0).dummifying);
    }
  }

  TEST_CASE("small integer enumeration") {
    const SmallIntegerGames games(2, -1, 1);
    CHECK(games.count() == 27);
    // The grand coalition's digit varies fastest.
    CHECK(games.game(0).worths()[1] == -1);
    CHECK(games.game(1).grand_worth() == 0);
    CHECK(games.game(26).singleton_worth(0) == 1);
    std::set<std::vector<double>> seen;
    for (std::uint64_t i = 0; i < games.count(); ++i) {
      const auto w = games.game(i).worths();
      seen.insert(std::vector<double>(w.begin(), w.end()));
    }
    CHECK(seen.size() == 27);
    CHECK(SmallIntegerGames(3, -1, 1).count() == 2187);
    CHECK_THROWS_AS(SmallIntegerGames(5, -1, 1), ConfigError);
  }
}
