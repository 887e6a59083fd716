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

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "bicirc/base_solver.hpp"
#include "bicirc/graph_core.hpp"

namespace bicirc::census {

struct CensusConfig {
  int m_min = 1, m_max = 8;
  int max_spokes = 0;    // 0: no limit
  int max_rt_types = 0;  // 0: no limit
  bool sample = false;
  std::uint64_t count = 0, seed = 42;
  SearchBudget budget;
  double seconds_per_spec = 60.0;
  int workers = 1;
  bool cross_check = true;
};

struct CensusSummary {
  std::size_t total = 0, discrepancies = 0, violations = 0;
  std::map<std::string, std::size_t> verdicts, strategies;
  std::vector<std::string> exceptions, problems;
  double seconds = 0.0;
};

// Connected regular specs in canonical form: S contains 0 and is the least of
// its shifts S - c, c in S; sets sorted.
std::vector<BicirculantSpec> enumerate(const CensusConfig& cfg);

// Runs the dispatcher (and the oracle where in range) on every spec, writing
// one JSON line per spec to `lines` as results arrive.
CensusSummary run(const CensusConfig& cfg, std::ostream* lines);

void print_summary(const CensusSummary& s, std::ostream& os);

}  // namespace bicirc::census
