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

#include "egal/errors.hpp"
#include "egal/game.hpp"
#include "egal/generators.hpp"
#include "oracle.hpp"

using namespace egal;

namespace {

ExplicitGame game_from(std::size_t n, std::initializer_list<std::pair<Coalition, double>> entries) {
  ExplicitGame zero(n);
  std::vector<double> w(zero.worths().begin(), zero.worths().end());
  for (const auto& [s, x] : entries) w[s.bits()] = x;
  return ExplicitGame(n, std::move(w));
}

}  // namespace

TEST_SUITE("game") {
  TEST_CASE("coalition basics") {
    const Coalition s = Coalition::of({0, 2});
    CHECK(s.bits() == 0b101);
    CHECK(s.size() == 2);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.with(1) == Coalition::grand(3));
    CHECK(s.without(0) == Coalition::singleton(2));
    CHECK((Coalition::grand(3) - s) == Coalition::singleton(1));
    CHECK(s.members() == std::vector<PlayerId>{0, 2});
    std::size_t count = 0;
    for_each_subset(s, [&](Coalition) { ++count; });
    CHECK(count == 4);  // includes the empty set
  }

  TEST_CASE("explicit game invariants") {
    CHECK_THROWS_AS(ExplicitGame(2, {0, 1, 2}), SizeMismatch);
    CHECK_THROWS_AS(ExplicitGame(2, {1, 1, 2, 3}), Error);
    CHECK_THROWS_AS(ExplicitGame(0), Error);
    CHECK_THROWS_AS(ExplicitGame(kMaxExplicitPlayers + 1), Error);
    const ExplicitGame g(2, {0, 1, 2, 7});
    CHECK(g.singleton_worth(1) == 2);
    CHECK(g.grand_worth() == 7);
    CHECK(g.is_integral());
    CHECK_FALSE(ExplicitGame(1, {0, 0.5}).is_integral());
  }

  TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), PartitionMismatch);
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), PartitionMismatch);
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), PartitionMismatch);
    CHECK_THROWS_AS(Partition(2, {{0, 2}}), PartitionMismatch);
    const Partition p(4, {{3, 1}, {0, 2}});
    CHECK(p.members(0) == std::vector<PlayerId>{1, 3});
    CHECK(p.union_of(2) == 1);
    CHECK(p.coalition(1) == Coalition::of({0, 2}));
    CHECK(p.expand(Coalition::of({0, 1})) == Coalition::grand(4));
    CHECK(Partition::singletons(3).union_count() == 3);
    CHECK(Partition::grand(3).union_size(0) == 3);

    // Large partitions work without bitmasks.
    std::vector<std::vector<PlayerId>> big(2);
    for (PlayerId i = 0; i < 550; ++i) big[i % 2].push_back(i);
    const Partition large(550, big);
    CHECK(large.union_size(0) == 275);
    CHECK(large.union_of(549) == 1);
  }

  TEST_CASE("quotient game") {
    const ExplicitGame g = game_from(3, {{Coalition::of({0, 1}), 5}, {Coalition::grand(3), 9}});
    const Partition p(3, {{0, 1}, {2}});
    const ExplicitGame q = quotient_game(g, p);
    CHECK(q.player_count() == 2);
    CHECK(q(Coalition::singleton(0)) == 5);
    CHECK(q(Coalition::grand(2)) == 9);
    CHECK(quotient_game(g, Partition::singletons(3)) == g);
    CHECK_THROWS_AS(quotient_game(g, Partition::singletons(4)), PartitionMismatch);

    const ExplicitGame r = random_game(4, {-5, 5, true}, GameStructure::Generic, 11);
    const Partition p4(4, {{0, 1}, {2, 3}});
    const auto brute = oracle::quotient(r, p4.unions());
    const ExplicitGame rq = quotient_game(r, p4);
    for (std::size_t s = 0; s < brute.size(); ++s) CHECK(rq.worths()[s] == brute[s]);
  }

  TEST_CASE("restriction") {
    const ExplicitGame g = random_game(3, {-5, 5, true}, GameStructure::Generic, 3);
    const auto whole = restrict_game(g, Coalition::grand(3));
    CHECK(whole.game == g);
    CHECK(whole.mapping == std::vector<PlayerId>{0, 1, 2});

    const auto r = restrict_game(g, Coalition::of({0, 2}));
    CHECK(r.mapping == std::vector<PlayerId>{0, 2});
    CHECK(r.game(Coalition::grand(2)) == g(Coalition::of({0, 2})));
    CHECK(r.game(Coalition::singleton(1)) == g(Coalition::singleton(2)));
    CHECK_THROWS_AS(restrict_game(g, Coalition()), DegenerateCoalition);

    const ExplicitGame d = scaled_dirac(4, Coalition::of({1, 3}), 2.5);
    const auto rd = restrict_game(d, Coalition::of({1, 2, 3}));
    CHECK(rd.game == scaled_dirac(3, Coalition::of({0, 2}), 2.5));
  }

  TEST_CASE("zero normalization and additive part") {
    const ExplicitGame g(2, {0, 1, 2, 7});
    const ExplicitGame z = zero_normalize(g);
    CHECK(z(Coalition::grand(2)) == 4);
    CHECK(z.singleton_worth(0) == 0);
    CHECK(zero_normalize(z) == z);
    CHECK(zero_normalize(additive_part(g)) == ExplicitGame(2));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const ExplicitGame r = random_game(4, {-4, 4, true}, GameStructure::Generic, seed);
      CHECK(add_games(additive_part(r), zero_normalize(r)) == r);
      const ExplicitGame a = additive_part(r);
      for (PlayerId i = 0; i < 4; ++i) CHECK(classify_player(a, i).dummifying);
    }
    CHECK(additive_part(zero_normalize(g)) == ExplicitGame(2));
  }

  TEST_CASE("scaled dirac and decomposition") {
    CHECK(scaled_dirac(3, Coalition::of({0}), 0.0) == ExplicitGame(3));
    const ExplicitGame top = scaled_dirac(3, Coalition::grand(3), 7);
    CHECK(dirac_decompose(top).size() == 1);
    CHECK(dirac_decompose(top)[0].second == 7);
    CHECK_THROWS_AS(scaled_dirac(3, Coalition(), 1), DegenerateCoalition);
    CHECK(dirac_decompose(ExplicitGame(3)).empty());

    const Coalition t = Coalition::of({0, 2});
    const ExplicitGame d = scaled_dirac(4, t, -3);
    for (PlayerId i : (Coalition::grand(4) - t).members()) CHECK(classify_player(d, i).nullifying);

    const ExplicitGame r = random_game(4, {-9, 9, true}, GameStructure::Generic, 5);
    ExplicitGame sum(4);
    for (const auto& [s, x] : dirac_decompose(r)) sum = add_games(sum, scaled_dirac(4, s, x));
    CHECK(sum == r);
  }

  TEST_CASE("add and scale") {
    const ExplicitGame a = random_game(4, {-3, 3, true}, GameStructure::Generic, 1);
    const ExplicitGame b = random_game(4, {-3, 3, true}, GameStructure::Generic, 2);
    CHECK(add_games(a, ExplicitGame(4)) == a);
    CHECK(scale_game(a, 0.0) == ExplicitGame(4));
    const ExplicitGame s = add_games(a, b);
    for (std::size_t m = 0; m < 16; ++m) CHECK(s.worths()[m] == a.worths()[m] + b.worths()[m]);
    CHECK_THROWS_AS(add_games(a, ExplicitGame(3)), SizeMismatch);
  }

  TEST_CASE("union floor game") {
    const ExplicitGame g = random_game(4, {-5, 5, true}, GameStructure::Generic, 9);
    const Partition p(4, {{0, 1}, {2, 3}});
    const ExplicitGame v1 = union_floor_game(g, p);
    CHECK(v1(Coalition::of({0, 1, 2})) == g(Coalition::of({0, 1})));
    CHECK(v1(Coalition::of({0, 2})) == 0);
    CHECK(v1(Coalition::grand(4)) == g(Coalition::of({0, 1})) + g(Coalition::of({2, 3})));
    CHECK(v1(p.coalition(1)) == g(p.coalition(1)));
    for (std::size_t k = 0; k < 2; ++k) CHECK(is_dummifying_union(v1, p, k));
  }

  TEST_CASE("summary extraction") {
    CHECK(summary_from_explicit(ExplicitGame(3), Partition::grand(3)).total == 0);
    const ExplicitGame r = random_game(5, {-4, 4, false}, GameStructure::Generic, 4);
    const Partition p(5, {{0, 3}, {1}, {2, 4}});
    const GameSummary s = summary_from_explicit(r, p);
    const GameSummary o = oracle::summary(r, p);
    CHECK(s.singleton == o.singleton);
    CHECK(s.union_worth == o.union_worth);
    CHECK(s.total == o.total);
    GameSummary bad = s;
    bad.union_worth.pop_back();
    CHECK_THROWS_AS(bad.validate(), SizeMismatch);
  }

  TEST_CASE("classifiers") {
    const ExplicitGame z(3);
    for (PlayerId i = 0; i < 3; ++i) {
      CHECK(classify_player(z, i).nullifying);
      CHECK(classify_player(z, i).dummifying);
      CHECK(is_dummifying_union(z, Partition::singletons(3), i));
    }
    CHECK(classify_pair(z, 0, 2));

    // e_T^alpha with |T| >= 2: outside T nullifying and (singletons 0) dummifying.
    const ExplicitGame d = scaled_dirac(3, Coalition::of({0, 1}), 4);
    CHECK(classify_player(d, 2).nullifying);
    CHECK(classify_player(d, 2).dummifying);
    CHECK_FALSE(classify_player(d, 0).nullifying);
    CHECK(classify_pair(d, 0, 1));
    CHECK_FALSE(classify_pair(d, 0, 2));

    // Additive game: all dummifying. A zero singleton worth does not make a
    // player nullifying; every coalition containing it would have to be worth 0.
    const ExplicitGame a = additive_part(ExplicitGame(3, {0, 1, 0, 1, 2, 3, 2, 3}));
    CHECK(classify_player(a, 0).dummifying);
    CHECK_FALSE(classify_player(a, 0).nullifying);
    CHECK_FALSE(classify_player(a, 1).nullifying);
    CHECK(classify_player(additive_part(ExplicitGame(1, {0, 0})), 0).nullifying);

    // Non-additive quotient: union 0 of {{0,1},{2}} is not dummifying.
    const ExplicitGame g = game_from(3, {{Coalition::grand(3), 5}});
    CHECK_FALSE(is_dummifying_union(g, Partition(3, {{0, 1}, {2}}), 0));

    // Real-valued games compare with relative tolerance.
    const ExplicitGame f(2, {0, 0.1 + 0.2, 0.0, 0.3});
    CHECK(classify_player(f, 1).dummifying);
  }

  TEST_CASE("approximate equality") {
    CHECK(approx_equal(1e12, 1e12 + 1.0));
    CHECK_FALSE(approx_equal(1.0, 1.0 + 1e-6));
    CHECK(approx_equal(0.0, 1e-10));
  }
}
