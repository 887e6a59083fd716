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

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "bicirc/base_solver.hpp"
#include "bicirc/graph_core.hpp"
#include "bicirc/report.hpp"
#include "bicirc/witness.hpp"

namespace bicirc {

struct Violation {
  enum class Kind {
    WrongLength,
    RepeatedVertex,
    UnknownVertex,
    NonAdjacentStep,
    OpenCycle,
    WrongEndpoints,
    ForbiddenEdgeUsed
  };
  Kind kind;
  std::size_t position = 0;
  std::string detail;
};

std::string to_string(Violation::Kind k);

struct CheckOptions {
  std::optional<std::pair<Vertex, Vertex>> endpoints;  // Path start/end
  std::function<bool(const Vertex&, const Vertex&)> forbidden;
};

// nullopt means the witness is valid.
std::optional<Violation> check_witness(const BicirculantSpec& spec, const HamiltonWitness& w,
                                       const CheckOptions& opts = {});

// Same contract against an explicit graph (bricks, induced subgraphs).
std::optional<Violation> check_order(const AdjacencyView& g, const std::vector<int>& order,
                                     bool cycle);

struct EdgeProfile {
  std::size_t outer = 0, inner = 0, spokes = 0;
  bool has_outer_and_inner() const { return outer > 0 && inner > 0; }
};

// Throws InvalidWitness when the witness does not validate.
EdgeProfile witness_edge_profile(const BicirculantSpec& spec, const HamiltonWitness& w);

struct Agreement {
  bool agree = true;
  bool oracle_consulted = false;
  std::string detail;
};

// Compares a dispatch report against the oracle (2m <= 24) or at least
// re-validates its witness.
Agreement cross_validate(const BicirculantSpec& spec, const SolveReport& report,
                         const SearchBudget& budget = {});

}  // namespace bicirc
