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

// Report stream: one JSON object per line, one line per CheckReport.
//
//   {"value":"esd3u","axiom":"QGP","outcome":"violated","expect":"violation",
//    "trials":0,"vacuous":0,"exhaustive":12,"seed":1,"tier":"exhaustive-n3",
//    "witness":{"n":3,"worths":[0,...],"partition":[[0,1],[2]],"subject":[0],
//               "observed":-1.5,"expected":-0.5,"detail":"..."}}
//
// Worths are listed by coalition bitmask (index 0 is the empty coalition).

#ifndef EGAL_REPORT_HPP
#define EGAL_REPORT_HPP

#include <istream>
#include <string>
#include <vector>

#include "egal/axioms.hpp"

namespace egal {

std::string report_to_line(const CheckReport& report);
/// Throws ParseError on malformed input.
CheckReport report_from_line(const std::string& line);
/// Reads every nonempty line of `in`.
std::vector<CheckReport> read_report_stream(std::istream& in);

}  // namespace egal

#endif  // EGAL_REPORT_HPP
