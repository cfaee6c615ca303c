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
#include "egal/generators.hpp"
#include "egal/values.hpp"
#include "oracle.hpp"

using namespace egal;

namespace {

// The elevator cost game, one subject per apartment, top floor first.
GameSummary elevator() {
  return {{100, 100, 100, 90, 90, 80}, Partition(6, {{0, 1, 2}, {3, 4}, {5}}), {100, 90, 80}, 120};
}

void check_shares(const Allocation& a, std::vector<double> expected, double tol = 5e-5) {
  REQUIRE(a.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(a[i] == doctest::Approx(expected[i]).epsilon(tol));
}

ExplicitGame esd2u_example() {
  std::vector<double> w(8, 0.0);
  w[0b001] = 1;
  w[0b010] = 3;
  w[0b011] = 6;
  w[0b100] = 2;
  w[0b111] = 12;
  return ExplicitGame(3, w);
}

}  // namespace

TEST_SUITE("values") {
  TEST_CASE("value names") {
    CHECK(ValueSpec::parse("ESD2U").kind() == ValueKind::ESD2U);
    CHECK(ValueSpec::parse("esd1u").kind() == ValueKind::ESD1U);
    CHECK(ValueSpec::parse("t2.3").variant() == VariantId{2, 3});
    CHECK(ValueSpec(ValueKind::EDU).label() == "ED^U");
    CHECK(ValueSpec(VariantId{4, 5}).name() == "T4.5");
    CHECK_THROWS_AS(ValueSpec::parse("shapley"), ParseError);
    CHECK_THROWS_AS(VariantId::parse("T5.1"), ParseError);
    CHECK_THROWS_AS(VariantId::parse("T1.6"), ParseError);
    CHECK(standard_values().size() == 6);
  }

  TEST_CASE("equal division") {
    check_shares(equal_division(elevator()), {20, 20, 20, 20, 20, 20});
    GameSummary z = elevator();
    z.total = 0;
    check_shares(equal_division(z), {0, 0, 0, 0, 0, 0});
  }

  TEST_CASE("equal surplus division") {
    check_shares(equal_surplus_division(elevator()), {26.6666, 26.6666, 26.6666, 16.6666, 16.6666, 6.6666});
    GameSummary additive = elevator();
    additive.total = 560;
    check_shares(equal_surplus_division(additive), {100, 100, 100, 90, 90, 80});
  }

  TEST_CASE("equal division with unions") {
    check_shares(equal_division_unions(elevator()), {13.3333, 13.3333, 13.3333, 20, 20, 40});
    GameSummary s = elevator();
    s.partition = Partition::singletons(6);
    s.union_worth = s.singleton;
    CHECK(equal_division_unions(s) == equal_division(s));
  }

  TEST_CASE("ESD1 with unions") {
    check_shares(esd1_unions(elevator()), {16.6666, 16.6666, 16.6666, 20, 20, 30});
    GameSummary s = elevator();
    s.partition = Partition::grand(6);
    s.union_worth = {120};
    CHECK(esd1_unions(s) == equal_division(s));
  }

  TEST_CASE("ESD2 with unions") {
    CHECK(oracle::close(esd2_unions(elevator()).shares, esd1_unions(elevator()).shares));
    check_shares(compute_value(ValueKind::ESD2U, esd2u_example(), Partition(3, {{0, 1}, {2}})), {3, 5, 4}, 1e-12);
    GameSummary s = elevator();
    s.partition = Partition::singletons(6);
    s.union_worth = s.singleton;
    CHECK(esd2_unions(s) == equal_surplus_division(s));
  }

  TEST_CASE("ESD3 with unions") {
    check_shares(esd3_unions(elevator()), {51.1111, 51.1111, 51.1111, 16.6666, 16.6666, -66.6666});
    GameSummary s = elevator();
    s.partition = Partition::singletons(6);
    s.union_worth = s.singleton;
    CHECK(esd3_unions(s) == equal_surplus_division(s));
  }

  TEST_CASE("values agree with the two-step oracle") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto rng = make_engine(seed, 77);
      const std::size_t n = 1 + seed % 6;
      const ExplicitGame g = random_game(n, {-6, 6, seed % 2 == 0}, GameStructure::Generic, rng);
      const Partition p = random_partition(n, rng);
      for (const ValueSpec& v : standard_values()) {
        const Allocation a = compute_value(v, g, p);
        CHECK_MESSAGE(oracle::close(a.shares, oracle::value(v.kind(), g, p)), v.label(), " seed ", seed);
        CHECK(is_efficient(a, g.grand_worth()));
      }
    }
  }

  TEST_CASE("linearity") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto rng = make_engine(seed, 78);
      const std::size_t n = 2 + seed % 5;
      const ExplicitGame v = random_game(n, {-5, 5, false}, GameStructure::Generic, rng);
      const ExplicitGame w = random_game(n, {-5, 5, false}, GameStructure::Generic, rng);
      const Partition p = random_partition(n, rng);
      const double c = -2.5;
      for (const ValueSpec& f : standard_values()) {
        const auto fv = compute_value(f, v, p);
        const auto fw = compute_value(f, w, p);
        const auto fs = compute_value(f, add_games(v, w), p);
        const auto fc = compute_value(f, scale_game(v, c), p);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(oracle::close(fs[i], fv[i] + fw[i]));
          CHECK(oracle::close(fc[i], c * fv[i]));
        }
      }
    }
  }

  TEST_CASE("catalog") {
    CHECK(variant_catalog().size() == 20);
    for (const VariantInfo& info : variant_catalog()) {
      CHECK(info.satisfies.size() == 4);
      CHECK(std::find(info.satisfies.begin(), info.satisfies.end(), info.excluded) == info.satisfies.end());
      CHECK_FALSE(info.formula.empty());
    }
    CHECK(variant_info({3, 4}).excluded == AxiomId::ADD);
    CHECK(theorem_value(2) == ValueKind::ESD1U);
    CHECK(theorem_axioms(4) == std::vector<AxiomId>{AxiomId::ADD, AxiomId::SWU, AxiomId::WSAU, AxiomId::DPP});
  }

  TEST_CASE("singleton variant fails efficiency") {
    const Allocation a = appendix_value({1, 1}, elevator());
    check_shares(a, {100, 100, 100, 90, 90, 80}, 1e-12);
    CHECK(a.sum() == 560);
    CHECK_FALSE(is_efficient(a, 120));
  }

  TEST_CASE("min-index variant") {
    const VariantId id{1, 4};
    ExplicitGame zero(4);
    CHECK(appendix_value(id, zero, Partition(4, {{0, 1}, {2, 3}})).sum() == 0);
    std::vector<double> w(16, 0.0);
    w.back() = 12;
    const ExplicitGame g(4, w);
    check_shares(appendix_value(id, g, Partition(4, {{0, 1}, {2, 3}})), {6, 0, 6, 0}, 1e-12);
    // The lowest member gets 2X/(m p_k), the others (p_k-2)X/(m p_k (p_k-1)); unions sum to X/m.
    std::vector<double> w5(32, 0.0);
    w5.back() = 12;
    const Allocation a = appendix_value(id, ExplicitGame(5, w5), Partition(5, {{0, 1, 2}, {3, 4}}));
    check_shares(a, {4, 1, 1, 6, 0}, 1e-12);
    CHECK(a[0] + a[1] + a[2] == doctest::Approx(6.0));
  }

  TEST_CASE("variant domains") {
    const ExplicitGame g = random_game(4, {-3, 3, true}, GameStructure::Generic, 8);
    CHECK_THROWS_AS(appendix_value({1, 4}, g, Partition(4, {{0, 1, 2}, {3}})), VariantDomainError);
    CHECK_FALSE(variant_in_domain({2, 3}, summary_from_explicit(g, Partition::singletons(4))));
    // Z_k = P_k when all singleton worths of a union agree.
    CHECK_THROWS_AS(appendix_value({4, 4}, ExplicitGame(4), Partition(4, {{0, 1}, {2, 3}})), VariantDomainError);
    std::vector<double> w(16, 0.0);
    w[0b0001] = -1;
    w[0b0100] = 2;
    w.back() = 8;
    const Allocation a = appendix_value({1, 5}, ExplicitGame(4, w), Partition(4, {{0, 1}, {2, 3}}));
    // Z_1 = {0}, Z_2 = {3}; members of Z_k get 2X/(m p_k |Z_k|) = 4, the others 0.
    check_shares(a, {4, 0, 0, 4}, 1e-12);
    CHECK(value_in_domain(ValueKind::ESD3U, summary_from_explicit(g, Partition::singletons(4))));
  }

  TEST_CASE("catalog variants are efficient where they should be") {
    for (const VariantInfo& info : variant_catalog()) {
      const bool efficient = std::find(info.satisfies.begin(), info.satisfies.end(), AxiomId::EFF) !=
                             info.satisfies.end();
      if (!efficient) continue;
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto rng = make_engine(seed, 79);
        const ExplicitGame g = random_game(6, {-5, 5, false}, GameStructure::Generic, rng);
        const Partition p = random_partition(6, rng, 2);
        const GameSummary s = summary_from_explicit(g, p);
        if (!variant_in_domain(info.id, s)) continue;
        CHECK_MESSAGE(is_efficient(appendix_value(info.id, s), s.total), info.id.to_string());
        // Union sums of the min-index and Z_k splits depend only on X.
      }
    }
  }

  TEST_CASE("coalitional bases") {
    CHECK(coalitional_base(ValueKind::EDU) == ValueKind::ED);
    CHECK(coalitional_base(ValueKind::ESD3U) == ValueKind::ESD);
    CHECK_FALSE(coalitional_base(ValueKind::ESD).has_value());
  }
}
