// Copyright 2025 The bicirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "bicirc/report.hpp"
#include "bicirc/witness.hpp"

namespace bicirc {

// indent < 0 gives a single line.
std::string report_to_json(const SolveReport& report, int indent = -1);
std::string witness_to_json(const HamiltonWitness& w);

// Accepts {"kind":"cycle"|"path","sequence":["u0","v3",...]} or a bare array
// (read as a cycle). Throws ParseError.
HamiltonWitness witness_from_json(std::string_view text);

std::string spec_to_json(const BicirculantSpec& spec);

}  // namespace bicirc
