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

#include <optional>
#include <utility>
#include <vector>

#include "bicirc/base_solver.hpp"
#include "bicirc/graph_core.hpp"
#include "bicirc/report.hpp"
#include "bicirc/representation.hpp"
#include "bicirc/witness.hpp"

namespace bicirc {

// ---- grid stitching ---------------------------------------------------------

// Hamilton cycle of B(m;a,S,b) for a rectangular representation with mu >= 1.
// Uses no outer edge between the first and last column and no inner edge
// between the last and first row.
HamiltonWitness uniform_grid_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                   const SearchBudget& budget = {});
HamiltonWitness uniform_grid_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                   const ComponentCycle& cycle);

// Single-row rectangular case (b divisible by gcd(m,S)): each column is a
// component of B(m;0,S,b); columns are chained by type-a edges using
// endpoint-constrained paths found by search inside one column.
HamiltonWitness uniform_row_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                  const SearchBudget& budget = {});

// Cycle through the cells i0..i0+rows, j0..j0+cols (rows, cols > 0) using only
// links inside the selection. The sequence covers the selected cells only.
HamiltonWitness grid_subrectangle_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                        int i0, int j0, int cols, int rows,
                                        const SearchBudget& budget = {});
HamiltonWitness grid_subrectangle_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                        int i0, int j0, int cols, int rows,
                                        const ComponentCycle& cycle);

// rho > 0: Hamilton cycle. rho == 0: Hamilton path from u_{(mu-1)b} to
// u_{mu b} (b as oriented in rep).
HamiltonWitness nonuniform_extension(const BicirculantSpec& spec, const GridRepresentation& rep,
                                     const SearchBudget& budget = {});
HamiltonWitness nonuniform_extension(const BicirculantSpec& spec, const GridRepresentation& rep,
                                     const ComponentCycle& cycle);

// The rho == 0 path translated to start at u_0; it ends at u_b.
HamiltonWitness origin_path(const GridRepresentation& rep, const HamiltonWitness& path);

// ---- 2-hooked ---------------------------------------------------------------

struct HookedComponentData {
  BicirculantSpec component;  // B(m/d; a/d, S'/d, b/d)
  HamiltonWitness cycle;      // in the component's labels, uses outer and inner edges
  HamiltonWitness path;       // in the component's labels, u_0 -> u_{b/d}
};

// Hamilton cycle of B(m; a, S' + {c}, b) from the components of B(m;a,S',b).
// `b` is the orientation in which data.path ends.
HamiltonWitness two_hooked(const BicirculantSpec& spec, int a, int b, int c,
                           const HookedComponentData& data);

// ---- brick products ---------------------------------------------------------

// Vertex (i, t) with i in [0,n), t in [1,k] has id (t-1)*n + i.
struct BrickProduct {
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, int>> matching;  // F: (layer-1 id, layer-k id)

  int id(int i, int t) const { return (t - 1) * n + i; }
  bool rung(int i, int t) const { return t >= 1 && t < k && (i + 1 + t) % 2 == 0; }
  std::vector<int> degree_two(int layer) const;
  AdjacencyView graph(bool with_matching = true) const;
};

BrickProduct brick_build(int n, int k);

// Hamilton cycle of X + F as vertex ids.
std::vector<int> brick_plus_matching_cycle(const BrickProduct& bp, const SearchBudget& budget = {});

// Shared engine: a graph that is a union of disjoint "layer" cycles plus a
// perfect matching of cross edges. Tries the 2-factors made of all cross
// edges and alternate layer edges, then falls back to search.
std::optional<std::vector<int>> layered_cycle(int n, const std::vector<std::vector<int>>& layers,
                                              const std::vector<int>& cross,
                                              const SearchBudget& budget, bool allow_search);

// ---- congruent types --------------------------------------------------------

// b = +-a (mod gcd(m,S)).
HamiltonWitness congruent_case(const BicirculantSpec& spec, int a, int b,
                               const SearchBudget& budget = {});
HamiltonWitness congruent_case(const BicirculantSpec& spec, int a, int b,
                               const ComponentCycle& cycle, const SearchBudget& budget = {});
StrategyTag congruent_route(const BicirculantSpec& spec, int a, int b);

// ---- classification and dispatch ----------------------------------------------

struct TypeResult {
  enum class Kind { TypeI, TypeII, NotApplicable };
  Kind kind = Kind::NotApplicable;
  int a = 0, b = 0;
  bool congruent = false;  // TypeI through b = +-a
};

// `min_spokes` is 4 for the classification proper; the ladder also runs the
// same pair scan on three-spoke specs.
TypeResult classify_type(const BicirculantSpec& spec, int min_spokes = 4);

std::optional<std::vector<int>> spanning_three_spoke_subset(const BicirculantSpec& spec);

struct DispatchOptions {
  SearchBudget budget;          // per base search
  double total_seconds = 60.0;  // whole solve
  bool base_search_fallback = true;
  int max_depth = 12;
};

SolveReport dispatch_solve(const BicirculantSpec& spec, const DispatchOptions& opts = {});

}  // namespace bicirc
