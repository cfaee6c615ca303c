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

#ifndef EGAL_AXIOM_ID_HPP
#define EGAL_AXIOM_ID_HPP

#include <array>
#include <string>
#include <string_view>

namespace egal {

enum class AxiomId {
  EFF,          ///< efficiency
  ADD,          ///< additivity on a common partition
  SWU,          ///< symmetry within unions
  SAU,          ///< symmetry among unions
  WSAU,         ///< SAU restricted to zero-singleton games
  NPP,          ///< nullifying player gets 0
  DPP,          ///< dummifying player gets v(i)
  DUPP,         ///< dummifying union / dummifying player in v_{P_k} gets v(i)
  DUNPP,        ///< dummifying union / nullifying player in v_{P_k} gets 0
  QGP,          ///< union totals equal the value of the quotient game
  COALITIONAL,  ///< value at P^n equals the classical base value
};

inline constexpr std::array kAllAxioms{
    AxiomId::EFF,  AxiomId::ADD, AxiomId::SWU,  AxiomId::SAU,   AxiomId::WSAU,        AxiomId::NPP,
    AxiomId::DPP, AxiomId::DUPP, AxiomId::DUNPP, AxiomId::QGP, AxiomId::COALITIONAL};

std::string to_string(AxiomId a);
/// Case-insensitive; throws ParseError on unknown names.
AxiomId parse_axiom(std::string_view text);

}  // namespace egal

#endif  // EGAL_AXIOM_ID_HPP
