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

#include "egal/values.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fmt/format.h>

namespace egal {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double sum_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s;
}

// v(N) - sum_j v(j)
double player_surplus(const GameSummary& s) { return s.total - sum_of(s.singleton); }

// v(N) - sum_l v(P_l)
double union_surplus(const GameSummary& s) { return s.total - sum_of(s.union_worth); }

// v(P_k) - sum_{j in P_k} v(j)
double within_surplus(const GameSummary& s, std::size_t k) {
  double inner = 0.0;
  for (PlayerId j : s.partition.members(k)) inner += s.singleton[j];
  return s.union_worth[k] - inner;
}

double union_denominator(const GameSummary& s, std::size_t k) {
  return static_cast<double>(s.union_count()) * static_cast<double>(s.partition.union_size(k));
}

}  // namespace

// AxiomId --------------------------------------------------------------------

std::string to_string(AxiomId a) {
  switch (a) {
    case AxiomId::EFF: return "EFF";
    case AxiomId::ADD: return "ADD";
    case AxiomId::SWU: return "SWU";
    case AxiomId::SAU: return "SAU";
    case AxiomId::WSAU: return "WSAU";
    case AxiomId::NPP: return "NPP";
    case AxiomId::DPP: return "DPP";
    case AxiomId::DUPP: return "DUPP";
    case AxiomId::DUNPP: return "DUNPP";
    case AxiomId::QGP: return "QGP";
    case AxiomId::COALITIONAL: return "COALITIONAL";
  }
  return "?";
}

AxiomId parse_axiom(std::string_view text) {
  const std::string t = lower(text);
  for (AxiomId a : kAllAxioms) {
    if (lower(to_string(a)) == t) return a;
  }
  throw ParseError("axiom", fmt::format("unknown axiom '{}'", text));
}

// VariantId / ValueSpec ------------------------------------------------------

std::string VariantId::to_string() const { return fmt::format("T{}.{}", theorem, item); }

VariantId VariantId::parse(std::string_view text) {
  const auto bad = [&] { return ParseError("value", fmt::format("unknown variant id '{}'", text)); };
  if (text.size() < 4 || (text[0] != 'T' && text[0] != 't')) throw bad();
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) throw bad();
  VariantId id;
  const auto t = text.substr(1, dot - 1);
  const auto i = text.substr(dot + 1);
  if (std::from_chars(t.data(), t.data() + t.size(), id.theorem).ptr != t.data() + t.size() ||
      std::from_chars(i.data(), i.data() + i.size(), id.item).ptr != i.data() + i.size()) {
    throw bad();
  }
  if (id.theorem < 1 || id.theorem > 4 || id.item < 1 || id.item > 5) throw bad();
  return id;
}

ValueSpec::ValueSpec(ValueKind kind) : kind_(kind) {
  if (kind == ValueKind::Variant) throw ConfigError("a variant value needs a variant id");
}

ValueSpec::ValueSpec(VariantId variant) : kind_(ValueKind::Variant), variant_(variant) {
  (void)variant_info(variant);
}

ValueSpec ValueSpec::parse(std::string_view text) {
  const std::string t = lower(text);
  if (t == "ed") return ValueKind::ED;
  if (t == "esd") return ValueKind::ESD;
  if (t == "edu") return ValueKind::EDU;
  if (t == "esd1u") return ValueKind::ESD1U;
  if (t == "esd2u") return ValueKind::ESD2U;
  if (t == "esd3u") return ValueKind::ESD3U;
  if (!t.empty() && t[0] == 't') return ValueSpec(VariantId::parse(text));
  throw ParseError("value", fmt::format("unknown value '{}'", text));
}

std::string ValueSpec::name() const {
  switch (kind_) {
    case ValueKind::ED: return "ed";
    case ValueKind::ESD: return "esd";
    case ValueKind::EDU: return "edu";
    case ValueKind::ESD1U: return "esd1u";
    case ValueKind::ESD2U: return "esd2u";
    case ValueKind::ESD3U: return "esd3u";
    case ValueKind::Variant: return variant_->to_string();
  }
  return "?";
}

std::string ValueSpec::label() const {
  switch (kind_) {
    case ValueKind::ED: return "ED";
    case ValueKind::ESD: return "ESD";
    case ValueKind::EDU: return "ED^U";
    case ValueKind::ESD1U: return "ESD1^U";
    case ValueKind::ESD2U: return "ESD2^U";
    case ValueKind::ESD3U: return "ESD3^U";
    case ValueKind::Variant: return variant_->to_string();
  }
  return "?";
}

const std::vector<ValueSpec>& standard_values() {
  static const std::vector<ValueSpec> kValues{ValueKind::ED,    ValueKind::ESD,   ValueKind::EDU,
                                              ValueKind::ESD1U, ValueKind::ESD2U, ValueKind::ESD3U};
  return kValues;
}

// The six values -------------------------------------------------------------

Allocation equal_division(const GameSummary& s) {
  s.validate();
  const double n = static_cast<double>(s.player_count());
  return {std::vector<double>(s.player_count(), s.total / n)};
}

Allocation equal_surplus_division(const GameSummary& s) {
  s.validate();
  const double n = static_cast<double>(s.player_count());
  const double surplus = player_surplus(s);
  Allocation a{std::vector<double>(s.player_count())};
  for (PlayerId i = 0; i < s.player_count(); ++i) a.shares[i] = s.singleton[i] + surplus / n;
  return a;
}

Allocation equal_division_unions(const GameSummary& s) {
  s.validate();
  Allocation a{std::vector<double>(s.player_count())};
  for (PlayerId i = 0; i < s.player_count(); ++i) {
    a.shares[i] = s.total / union_denominator(s, s.partition.union_of(i));
  }
  return a;
}

Allocation esd1_unions(const GameSummary& s) {
  s.validate();
  const double surplus = union_surplus(s);
  Allocation a{std::vector<double>(s.player_count())};
  for (PlayerId i = 0; i < s.player_count(); ++i) {
    const std::size_t k = s.partition.union_of(i);
    const double pk = static_cast<double>(s.partition.union_size(k));
    a.shares[i] = s.union_worth[k] / pk + surplus / union_denominator(s, k);
  }
  return a;
}

Allocation esd2_unions(const GameSummary& s) {
  s.validate();
  const double surplus = union_surplus(s);
  std::vector<double> inner(s.union_count());
  for (std::size_t k = 0; k < s.union_count(); ++k) inner[k] = within_surplus(s, k);
  Allocation a{std::vector<double>(s.player_count())};
  for (PlayerId i = 0; i < s.player_count(); ++i) {
    const std::size_t k = s.partition.union_of(i);
    const double pk = static_cast<double>(s.partition.union_size(k));
    a.shares[i] = s.singleton[i] + inner[k] / pk + surplus / union_denominator(s, k);
  }
  return a;
}

Allocation esd3_unions(const GameSummary& s) {
  s.validate();
  const double surplus = player_surplus(s);
  Allocation a{std::vector<double>(s.player_count())};
  for (PlayerId i = 0; i < s.player_count(); ++i) {
    a.shares[i] = s.singleton[i] + surplus / union_denominator(s, s.partition.union_of(i));
  }
  return a;
}

// Counterexample catalog -----------------------------------------------------

namespace {

VariantInfo make_variant(int theorem, int item, VariantBase base, VariantPool pool, VariantSplit split,
                         std::string formula, AxiomId excluded) {
  std::vector<AxiomId> satisfies;
  satisfies.push_back(AxiomId::EFF);
  for (AxiomId a : theorem_axioms(theorem)) satisfies.push_back(a);
  std::erase(satisfies, excluded);
  return {{theorem, item}, base, pool, split, std::move(formula), std::move(satisfies), excluded};
}

std::vector<VariantInfo> build_catalog() {
  using B = VariantBase;
  using P = VariantPool;
  using S = VariantSplit;
  const std::string kMin = "i = min P_k: 2X/(m p_k); others: (p_k-2)X/(m p_k (p_k-1))";
  const std::string kZ = "i in Z_k: 2X/(m p_k |Z_k|); others: (p_k-2)X/(m p_k (p_k-|Z_k|))";
  const std::string kUnionX = "X = v(N) - sum_l v(P_l)";
  const std::string kPlayerX = "X = v(N) - sum_j v(j)";
  std::vector<VariantInfo> c;
  // Theorem 1: ED^U with {ADD, SWU, SAU, NPP}.
  c.push_back(make_variant(1, 1, B::Singleton, P::None, S::UnionEqual, "v(i)", AxiomId::EFF));
  c.push_back(make_variant(1, 2, B::UnionPerCapita, P::UnionSurplus, S::UnionEqual,
                           "v(P_k)/p_k + (v(N) - sum_l v(P_l))/(m p_k)", AxiomId::NPP));
  c.push_back(make_variant(1, 3, B::None, P::Total, S::PerCapita, "v(N)/n", AxiomId::SAU));
  c.push_back(make_variant(1, 4, B::None, P::Total, S::MinIndex, kMin + ", X = v(N)", AxiomId::SWU));
  c.push_back(make_variant(1, 5, B::None, P::Total, S::MinSingletonSet, kZ + ", X = v(N)", AxiomId::ADD));
  // Theorem 2: ESD1^U with {ADD, SWU, SAU, DUNPP}.
  c.push_back(make_variant(2, 1, B::Singleton, P::None, S::UnionEqual, "v(i)", AxiomId::EFF));
  c.push_back(make_variant(2, 2, B::UnionPerCapita, P::UnionSurplus, S::PerCapita,
                           "v(P_k)/p_k + (v(N) - sum_l v(P_l))/n", AxiomId::SAU));
  c.push_back(make_variant(2, 3, B::UnionPerCapita, P::UnionSurplus, S::MinIndex,
                           "v(P_k)/p_k + " + kMin + ", " + kUnionX, AxiomId::SWU));
  c.push_back(make_variant(2, 4, B::UnionPerCapita, P::UnionSurplus, S::MinSingletonSet,
                           "v(P_k)/p_k + " + kZ + ", " + kUnionX, AxiomId::ADD));
  c.push_back(make_variant(2, 5, B::WithinUnionSurplus, P::UnionSurplus, S::UnionEqual,
                           "v(i) + (v(P_k) - sum_{j in P_k} v(j))/p_k + (v(N) - sum_l v(P_l))/(m p_k)",
                           AxiomId::DUNPP));
  // Theorem 3: ESD2^U with {ADD, SWU, SAU, DUPP}.
  c.push_back(make_variant(3, 1, B::Singleton, P::None, S::UnionEqual, "v(i)", AxiomId::EFF));
  c.push_back(make_variant(3, 2, B::WithinUnionSurplus, P::UnionSurplus, S::PerCapita,
                           "v(i) + (v(P_k) - sum_{j in P_k} v(j))/p_k + (v(N) - sum_l v(P_l))/n",
                           AxiomId::SAU));
  c.push_back(make_variant(3, 3, B::WithinUnionSurplus, P::UnionSurplus, S::MinIndex,
                           "v(i) + (v(P_k) - sum_{j in P_k} v(j))/p_k + " + kMin + ", " + kUnionX,
                           AxiomId::SWU));
  c.push_back(make_variant(3, 4, B::WithinUnionSurplus, P::UnionSurplus, S::MinSingletonSet,
                           "v(i) + (v(P_k) - sum_{j in P_k} v(j))/p_k + " + kZ + ", " + kUnionX,
                           AxiomId::ADD));
  c.push_back(make_variant(3, 5, B::UnionPerCapita, P::UnionSurplus, S::UnionEqual,
                           "v(P_k)/p_k + (v(N) - sum_l v(P_l))/(m p_k)", AxiomId::DUPP));
  // Theorem 4: ESD3^U with {ADD, SWU, WSAU, DPP}.
  c.push_back(make_variant(4, 1, B::Singleton, P::None, S::UnionEqual, "v(i)", AxiomId::EFF));
  c.push_back(make_variant(4, 2, B::Singleton, P::PlayerSurplus, S::PerCapita,
                           "v(i) + (v(N) - sum_j v(j))/n", AxiomId::WSAU));
  c.push_back(make_variant(4, 3, B::Singleton, P::PlayerSurplus, S::MinIndex,
                           "v(i) + " + kMin + ", " + kPlayerX, AxiomId::SWU));
  c.push_back(make_variant(4, 4, B::Singleton, P::PlayerSurplus, S::MinSingletonSet,
                           "v(i) + " + kZ + ", " + kPlayerX, AxiomId::ADD));
  c.push_back(make_variant(4, 5, B::UnionPerCapita, P::UnionSurplus, S::UnionEqual,
                           "v(P_k)/p_k + (v(N) - sum_l v(P_l))/(m p_k)", AxiomId::DPP));
  return c;
}

// Z_k = {j in P_k : v(j) = min_{z in P_k} v(z)}, as a membership mask over players.
std::vector<bool> min_singleton_sets(const GameSummary& s, std::vector<std::size_t>& sizes) {
  std::vector<bool> in_z(s.player_count(), false);
  sizes.assign(s.union_count(), 0);
  for (std::size_t k = 0; k < s.union_count(); ++k) {
    const auto& members = s.partition.members(k);
    double lowest = s.singleton[members.front()];
    for (PlayerId j : members) lowest = std::min(lowest, s.singleton[j]);
    for (PlayerId j : members) {
      if (s.singleton[j] == lowest) {
        in_z[j] = true;
        ++sizes[k];
      }
    }
  }
  return in_z;
}

std::optional<std::string> domain_violation(const VariantInfo& info, const GameSummary& s) {
  if (info.pool == VariantPool::None) return std::nullopt;
  if (info.split != VariantSplit::MinIndex && info.split != VariantSplit::MinSingletonSet) {
    return std::nullopt;
  }
  for (std::size_t k = 0; k < s.union_count(); ++k) {
    if (s.partition.union_size(k) < 2) {
      return fmt::format("{} needs every union to have at least 2 members; union {} has 1",
                         info.id.to_string(), k);
    }
  }
  if (info.split == VariantSplit::MinSingletonSet) {
    std::vector<std::size_t> z_sizes;
    (void)min_singleton_sets(s, z_sizes);
    for (std::size_t k = 0; k < s.union_count(); ++k) {
      if (z_sizes[k] == s.partition.union_size(k)) {
        return fmt::format("{} needs Z_k to be a proper subset of P_k; all singleton worths of union {} are equal",
                           info.id.to_string(), k);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<AxiomId> theorem_axioms(int theorem) {
  switch (theorem) {
    case 1: return {AxiomId::ADD, AxiomId::SWU, AxiomId::SAU, AxiomId::NPP};
    case 2: return {AxiomId::ADD, AxiomId::SWU, AxiomId::SAU, AxiomId::DUNPP};
    case 3: return {AxiomId::ADD, AxiomId::SWU, AxiomId::SAU, AxiomId::DUPP};
    case 4: return {AxiomId::ADD, AxiomId::SWU, AxiomId::WSAU, AxiomId::DPP};
    default: throw ConfigError(fmt::format("no theorem {}", theorem));
  }
}

ValueKind theorem_value(int theorem) {
  switch (theorem) {
    case 1: return ValueKind::EDU;
    case 2: return ValueKind::ESD1U;
    case 3: return ValueKind::ESD2U;
    case 4: return ValueKind::ESD3U;
    default: throw ConfigError(fmt::format("no theorem {}", theorem));
  }
}

const std::vector<VariantInfo>& variant_catalog() {
  static const std::vector<VariantInfo> kCatalog = build_catalog();
  return kCatalog;
}

const VariantInfo& variant_info(VariantId id) {
  for (const auto& v : variant_catalog()) {
    if (v.id == id) return v;
  }
  throw ParseError("value", fmt::format("unknown variant id '{}'", id.to_string()));
}

bool variant_in_domain(VariantId id, const GameSummary& s) {
  return !domain_violation(variant_info(id), s).has_value();
}

Allocation appendix_value(VariantId id, const GameSummary& s) {
  s.validate();
  const VariantInfo& info = variant_info(id);
  if (auto why = domain_violation(info, s)) throw VariantDomainError(*why);

  double pool = 0.0;
  switch (info.pool) {
    case VariantPool::None: break;
    case VariantPool::Total: pool = s.total; break;
    case VariantPool::UnionSurplus: pool = union_surplus(s); break;
    case VariantPool::PlayerSurplus: pool = player_surplus(s); break;
  }

  std::vector<std::size_t> z_sizes;
  std::vector<bool> in_z;
  if (info.split == VariantSplit::MinSingletonSet) in_z = min_singleton_sets(s, z_sizes);

  const double n = static_cast<double>(s.player_count());
  Allocation a{std::vector<double>(s.player_count())};
  for (PlayerId i = 0; i < s.player_count(); ++i) {
    const std::size_t k = s.partition.union_of(i);
    const double pk = static_cast<double>(s.partition.union_size(k));
    const double mpk = union_denominator(s, k);

    double base = 0.0;
    switch (info.base) {
      case VariantBase::None: break;
      case VariantBase::Singleton: base = s.singleton[i]; break;
      case VariantBase::UnionPerCapita: base = s.union_worth[k] / pk; break;
      case VariantBase::WithinUnionSurplus: base = s.singleton[i] + within_surplus(s, k) / pk; break;
    }

    double share = 0.0;
    if (info.pool != VariantPool::None) {
      switch (info.split) {
        case VariantSplit::UnionEqual: share = pool / mpk; break;
        case VariantSplit::PerCapita: share = pool / n; break;
        case VariantSplit::MinIndex:
          share = i == s.partition.members(k).front() ? 2.0 * pool / mpk
                                                      : (pk - 2.0) * pool / (mpk * (pk - 1.0));
          break;
        case VariantSplit::MinSingletonSet: {
          const double z = static_cast<double>(z_sizes[k]);
          share = in_z[i] ? 2.0 * pool / (mpk * z) : (pk - 2.0) * pool / (mpk * (pk - z));
          break;
        }
      }
    }
    a.shares[i] = base + share;
  }
  return a;
}

Allocation appendix_value(VariantId id, const ExplicitGame& g, const Partition& p) {
  return appendix_value(id, summary_from_explicit(g, p));
}

// Dispatch -------------------------------------------------------------------

Allocation compute_value(const ValueSpec& spec, const GameSummary& s) {
  switch (spec.kind()) {
    case ValueKind::ED: return equal_division(s);
    case ValueKind::ESD: return equal_surplus_division(s);
    case ValueKind::EDU: return equal_division_unions(s);
    case ValueKind::ESD1U: return esd1_unions(s);
    case ValueKind::ESD2U: return esd2_unions(s);
    case ValueKind::ESD3U: return esd3_unions(s);
    case ValueKind::Variant: return appendix_value(*spec.variant(), s);
  }
  throw ConfigError("unknown value kind");
}

Allocation compute_value(const ValueSpec& spec, const ExplicitGame& g, const Partition& p) {
  return compute_value(spec, summary_from_explicit(g, p));
}

bool value_in_domain(const ValueSpec& spec, const GameSummary& s) {
  return !spec.is_variant() || variant_in_domain(*spec.variant(), s);
}

std::optional<ValueKind> coalitional_base(ValueKind kind) {
  switch (kind) {
    case ValueKind::EDU: return ValueKind::ED;
    case ValueKind::ESD1U:
    case ValueKind::ESD2U:
    case ValueKind::ESD3U: return ValueKind::ESD;
    default: return std::nullopt;
  }
}

bool is_efficient(const Allocation& a, double total) { return approx_equal(a.sum(), total); }

}  // namespace egal
