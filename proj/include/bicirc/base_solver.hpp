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
#include <optional>
#include <utility>
#include <vector>

#include "bicirc/graph_core.hpp"
#include "bicirc/witness.hpp"

namespace bicirc {

// Dense-id graph. For spec-built views outer u_i has id i and inner v_i has
// id m + i; neighbour lists are sorted ascending.
class AdjacencyView {
 public:
  AdjacencyView() = default;
  static AdjacencyView from_spec(const BicirculantSpec& spec);
  // Labels may be empty for abstract graphs.
  static AdjacencyView from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                  std::vector<Vertex> labels = {});

  int size() const { return static_cast<int>(nbrs_.size()); }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  bool has_edge(int a, int b) const;
  bool labelled() const { return !labels_.empty(); }
  const Vertex& label(int id) const { return labels_[id]; }
  int id(const Vertex& v) const;

  // Returns the id of a fresh vertex joined to `to`.
  int add_vertex(const std::vector<int>& to);

 private:
  std::vector<std::vector<int>> nbrs_;
  std::vector<Vertex> labels_;
  std::map<Vertex, int> index_;
  int spec_m_ = -1;  // >= 0 when ids follow the outer-then-inner layout
};

struct SearchBudget {
  enum class Algorithm { AutoDPorDFS, DPOnly, DFSOnly };
  std::uint64_t node_limit = 20'000'000;
  double time_limit = 20.0;
  Algorithm algorithm = Algorithm::AutoDPorDFS;
  // Randomised rotation-extension pass run before exhaustive search on
  // graphs above the dynamic-programming range.
  bool heuristic = true;
  std::uint64_t seed = 1;
};

enum class SearchVerdict { Found, None, Inconclusive };

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::Inconclusive;
  std::vector<int> order;  // vertex ids, cycle or path order
  std::uint64_t nodes = 0;
};

inline constexpr int kExactRange = 24;

// Hamilton cycle by id; `order` starts at the smallest id.
SearchResult find_cycle(const AdjacencyView& g, const SearchBudget& budget);
// Hamilton path from s to t.
SearchResult find_path(const AdjacencyView& g, int s, int t, const SearchBudget& budget);

// Individual engines, exposed for cross-engine tests.
SearchResult held_karp_cycle(const AdjacencyView& g);
SearchResult dfs_cycle(const AdjacencyView& g, const SearchBudget& budget);
SearchResult rotation_extension_cycle(const AdjacencyView& g, const SearchBudget& budget);
SearchResult rotation_extension_path(const AdjacencyView& g, int s, int t, const SearchBudget& budget);

// nullopt means definitively absent; BudgetExhausted when undecided.
std::optional<HamiltonWitness> hamilton_cycle(const AdjacencyView& g,
                                              const SearchBudget& budget);
std::optional<HamiltonWitness> hamilton_path(const AdjacencyView& g, const Vertex& start,
                                             const Vertex& end, const SearchBudget& budget);

struct OracleAnswer {
  enum class Kind { Yes, No, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<HamiltonWitness> witness;
};

OracleAnswer oracle_is_hamiltonian(const BicirculantSpec& spec, const SearchBudget& budget = {});

// A Hamilton cycle of the component of H(m;S) containing u_0, written in the
// parent labels, rotated so that it reads u_0, v_., u_., ..., v_s.
struct ComponentCycle {
  std::vector<Vertex> cycle;
  Vertex u0, v0, u1, ut, vs;  // c_0, c_1, c_2, c_{2n-2}, c_{2n-1}
  Vertex vh, uz, vk;          // a later stretch of the cycle; see designate()
  int half_length() const { return static_cast<int>(cycle.size() / 2); }
  // C minus the edge u_0 v_s, read from v_s to u_0.
  std::vector<Vertex> path() const;
};

// Hamilton cycle of the connected cyclic Haar graph H(m;S), starting at u_0
// and, when 0 is in S, continuing with v_0.
std::optional<std::vector<Vertex>> haar_cycle(int m, const std::vector<int>& S,
                                              const SearchBudget& budget);

// Throws ComponentNotHamiltonian when the search fails.
ComponentCycle structured_component_path(int m, const std::vector<int>& S,
                                         const SearchBudget& budget);

}  // namespace bicirc
