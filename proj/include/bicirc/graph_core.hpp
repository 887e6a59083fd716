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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bicirc {

// ---- modular helpers -------------------------------------------------------

std::int64_t mod(std::int64_t x, std::int64_t m);
std::int64_t gcd(std::int64_t a, std::int64_t b);
// Inverse of x modulo n; requires gcd(x, n) == 1. Returns 0 when n == 1.
std::int64_t inverse_mod(std::int64_t x, std::int64_t n);

// ---- vertices and edges ----------------------------------------------------

enum class Layer : std::uint8_t { Outer, Inner };

struct Vertex {
  Layer layer = Layer::Outer;
  int index = 0;
  auto operator<=>(const Vertex&) const = default;
};

inline Vertex outer(int i) { return {Layer::Outer, i}; }
inline Vertex inner(int i) { return {Layer::Inner, i}; }

// "u3" / "v17".
std::string to_string(const Vertex& v);
Vertex parse_vertex(std::string_view text);

enum class EdgeClass : std::uint8_t { Outer, Inner, Spoke };

struct EdgeKind {
  EdgeClass cls = EdgeClass::Spoke;
  int type = 0;  // outer/inner: representative in [1, m/2]; spoke: c with v = u + c
  auto operator<=>(const EdgeKind&) const = default;
};

struct Edge {
  Vertex a;
  Vertex b;
  EdgeKind kind;
};

// ---- specs -----------------------------------------------------------------

struct RawSpec {
  std::int64_t m = 0;
  std::vector<std::int64_t> R, S, T;
};

// Residue sets are sorted and reduced to [0, m).
struct BicirculantSpec {
  int m = 1;
  std::vector<int> R, S, T;
  bool operator==(const BicirculantSpec&) const = default;

  int order() const { return 2 * m; }
  bool has_half(const std::vector<int>& set) const;
  int outer_degree() const;
  int inner_degree() const;
};

struct ExceptionTag {
  enum class Kind { K2, AlspachGP };
  Kind kind = Kind::K2;
  int m = 1;
  bool operator==(const ExceptionTag&) const = default;
};
std::string to_string(const ExceptionTag& tag);

// Reduces, deduplicates and (optionally) closes R and T under negation.
BicirculantSpec validate_spec(const RawSpec& raw, bool close_symmetric = true);

// Shifts S so that it contains 0. Returns the subtracted shift c; the map
// u_i -> u_i, v_i -> v_{i-c} is an isomorphism onto the result.
std::pair<BicirculantSpec, int> normalize(const BicirculantSpec& spec);

std::vector<Edge> edges(const BicirculantSpec& spec);
std::size_t edge_count(const BicirculantSpec& spec);

// gcd(m, R, S, T); 1 iff connected (for normalized specs).
int connectivity_gcd(const BicirculantSpec& spec);
bool is_connected(const BicirculantSpec& spec);

// Maps a vertex of component i (of delta) into the parent graph.
struct ComponentEmbedding {
  int delta = 1;
  int offset = 0;
  Vertex operator()(const Vertex& v) const {
    return {v.layer, v.index * delta + offset};
  }
};

std::vector<std::pair<BicirculantSpec, ComponentEmbedding>> split_components(
    const BicirculantSpec& spec);

std::optional<ExceptionTag> recognize_exception(const BicirculantSpec& spec);

BicirculantSpec subgraph_ab(const BicirculantSpec& spec, int a, int b);
BicirculantSpec haar_restrict(const BicirculantSpec& spec,
                              const std::vector<int>& spokes,
                              bool keep_rt = false);

// u_i <-> v_i: B(m;R,S,T) is isomorphic to B(m;T,-S,R).
BicirculantSpec swap_roles(const BicirculantSpec& spec);

// Adjacency test straight from the parameters.
bool adjacent(const BicirculantSpec& spec, const Vertex& x, const Vertex& y);
EdgeKind classify_edge(const BicirculantSpec& spec, const Vertex& x,
                       const Vertex& y);

// Text form "B(m; a1,a2; c1,c2; b1,b2)" and JSON mirror.
BicirculantSpec parse_spec(std::string_view text);
std::string format_spec(const BicirculantSpec& spec);

// gcd(m, S) for a spoke set.
int spoke_gcd(int m, const std::vector<int>& S);

}  // namespace bicirc
