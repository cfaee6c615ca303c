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
 * \file egal/values.hpp
 *
 * \brief Egalitarian allocation values for TU-games with and without a priori
 *  unions, and the catalog of counterexample formulas used to show that the
 *  axioms characterizing them are independent.
 *
 * Every value depends only on v(i), v(P_k) and v(N), so GameSummary is the
 * canonical input. Explicit games are converted with summary_from_explicit.
 * Cost games are passed as-is (c in place of v).
 */

#ifndef EGAL_VALUES_HPP
#define EGAL_VALUES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egal/axiom_id.hpp"
#include "egal/game.hpp"

namespace egal {

enum class ValueKind { ED, ESD, EDU, ESD1U, ESD2U, ESD3U, Variant };

/// Counterexample formula identifier: theorem 1..4 and item 1..5 of that
/// theorem's independence list, written "T<theorem>.<item>".
struct VariantId {
  int theorem = 0;
  int item = 0;

  std::string to_string() const;
  /// Accepts "T2.3" or "t2.3"; throws ParseError for anything else.
  static VariantId parse(std::string_view text);

  friend auto operator<=>(const VariantId&, const VariantId&) = default;
};

class ValueSpec {
 public:
  /*implicit*/ ValueSpec(ValueKind kind);
  explicit ValueSpec(VariantId variant);

  /// "ed", "esd", "edu", "esd1u", "esd2u", "esd3u" or a variant id.
  static ValueSpec parse(std::string_view text);

  ValueKind kind() const { return kind_; }
  const std::optional<VariantId>& variant() const { return variant_; }
  bool is_variant() const { return kind_ == ValueKind::Variant; }
  /// Lower-case CLI name ("edu", "T2.3").
  std::string name() const;
  /// Display label ("ED^U", "T2.3").
  std::string label() const;

  friend bool operator==(const ValueSpec&, const ValueSpec&) = default;

 private:
  ValueKind kind_;
  std::optional<VariantId> variant_;
};

/// The six values, in table order.
const std::vector<ValueSpec>& standard_values();

// The six values ------------------------------------------------------------

/// ED_i = v(N) / n.
Allocation equal_division(const GameSummary& s);
/// ESD_i = v(i) + (v(N) - sum_j v(j)) / n.
Allocation equal_surplus_division(const GameSummary& s);
/// ED^U_i = v(N) / (m p_k).
Allocation equal_division_unions(const GameSummary& s);
/// ESD1^U_i = v(P_k) / p_k + (v(N) - sum_l v(P_l)) / (m p_k).
Allocation esd1_unions(const GameSummary& s);
/// ESD2^U_i = v(i) + (v(P_k) - sum_{j in P_k} v(j)) / p_k
///            + (v(N) - sum_l v(P_l)) / (m p_k).
Allocation esd2_unions(const GameSummary& s);
/// ESD3^U_i = v(i) + (v(N) - sum_j v(j)) / (m p_k).
Allocation esd3_unions(const GameSummary& s);

// Counterexample formulas ---------------------------------------------------

/// Each counterexample is "base term + a split of a pooled amount".
enum class VariantBase {
  None,                ///< 0
  Singleton,           ///< v(i)
  UnionPerCapita,      ///< v(P_k) / p_k
  WithinUnionSurplus,  ///< v(i) + (v(P_k) - sum_{j in P_k} v(j)) / p_k
};

enum class VariantPool {
  None,          ///< nothing pooled
  Total,         ///< v(N)
  UnionSurplus,  ///< v(N) - sum_l v(P_l)
  PlayerSurplus, ///< v(N) - sum_j v(j)
};

enum class VariantSplit {
  UnionEqual,       ///< pool / (m p_k)
  PerCapita,        ///< pool / n
  MinIndex,         ///< lowest-index member of P_k gets 2 pool / (m p_k)
  MinSingletonSet,  ///< members of Z_k (minimal v(j) in P_k) get 2 pool / (m p_k |Z_k|)
};

struct VariantInfo {
  VariantId id;
  VariantBase base;
  VariantPool pool;
  VariantSplit split;
  std::string formula;
  /// Axioms the item is listed as satisfying (the theorem's set plus EFF,
  /// minus the excluded one).
  std::vector<AxiomId> satisfies;
  AxiomId excluded;
};

/// All 20 counterexample items, ordered by theorem then item.
const std::vector<VariantInfo>& variant_catalog();
/// Throws ParseError for an id not in the catalog.
const VariantInfo& variant_info(VariantId id);
/// Axioms characterizing the value of theorem 1..4 (EDU, ESD1U, ESD2U, ESD3U).
std::vector<AxiomId> theorem_axioms(int theorem);
/// The value characterized by theorem 1..4.
ValueKind theorem_value(int theorem);

/// Throws VariantDomainError when the formula is not well formed on `s`.
Allocation appendix_value(VariantId id, const GameSummary& s);
Allocation appendix_value(VariantId id, const ExplicitGame& g, const Partition& p);
/// True when appendix_value would not throw.
bool variant_in_domain(VariantId id, const GameSummary& s);

// Dispatch ------------------------------------------------------------------

Allocation compute_value(const ValueSpec& spec, const GameSummary& s);
Allocation compute_value(const ValueSpec& spec, const ExplicitGame& g, const Partition& p);
bool value_in_domain(const ValueSpec& spec, const GameSummary& s);

/// The classical value a union value reduces to under P^n (ED for ED^U, ESD
/// for the three ESD extensions); empty for ED, ESD and the variants.
std::optional<ValueKind> coalitional_base(ValueKind kind);

/// Sum of shares equals `total` within kRelTol.
bool is_efficient(const Allocation& a, double total);

}  // namespace egal

#endif  // EGAL_VALUES_HPP
