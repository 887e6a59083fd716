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

#include <utility>
#include <vector>

#include "bicirc/graph_core.hpp"

namespace bicirc {

// Grid of the gcd(m,S) components of H(m;S) induced by an outer type a and
// an inner type b. Cell (i,j) is the component containing u_{ib+ja}; rows
// 0..mu-1 are full (lambda+1 cells), row mu has rho+1 cells. rho == lambda
// encodes the rectangular (uniform) case.
struct GridRepresentation {
  enum class Kind { Uniform, NonUniform };
  Kind kind = Kind::Uniform;
  int m = 0;
  int a = 0;
  int b = 0;               // oriented; may be the negation of the input
  bool b_negated = false;
  int g_plus_1 = 0;        // gcd(m,S)
  int h = 0;               // b = h*a (mod gcd(m,S)); 0 for uniform
  int h_star = 0;
  int lambda = 0, mu = 0, rho = 0;
  // Indexed by component residue (vertex index mod gcd(m,S)).
  std::vector<std::pair<int, int>> cell_of_component;

  bool in_grid(int i, int j) const {
    return i >= 0 && j >= 0 && j <= lambda && (i < mu || (i == mu && j <= rho));
  }
  // Index translation of cell (i,j) relative to cell (0,0).
  int offset(int i, int j) const;
  int component_at(int i, int j) const;
  int cell_count() const { return mu * (lambda + 1) + rho + 1; }
};

struct GridCoord {
  int i = 0, j = 0, x = 0;  // x counts vertices of the cell component, gcd(m,S) apart
  Layer layer = Layer::Outer;
};

int haar_component_of(int m, const std::vector<int>& S, const Vertex& v);

GridRepresentation uniform_params(int m, const std::vector<int>& S, int a, int b);
// Convenience form with a = 1.
GridRepresentation uniform_params(int m, const std::vector<int>& S, int b);
GridRepresentation nonuniform_params(int m, const std::vector<int>& S, int a, int b);

std::vector<std::pair<int, int>> grid_assign(const GridRepresentation& rep);

Vertex coord_vertex(const GridRepresentation& rep, const GridCoord& c);

}  // namespace bicirc
