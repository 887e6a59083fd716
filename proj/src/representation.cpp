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

#include "bicirc/representation.hpp"

#include <algorithm>

#include "bicirc/errors.hpp"

namespace bicirc {

int GridRepresentation::offset(int i, int j) const {
  return static_cast<int>(mod(static_cast<std::int64_t>(i) * b + static_cast<std::int64_t>(j) * a, m));
}

int GridRepresentation::component_at(int i, int j) const {
  if (!in_grid(i, j)) throw OutOfGrid("cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return offset(i, j) % g_plus_1;
}

int haar_component_of(int m, const std::vector<int>& S, const Vertex& v) {
  if (std::find(S.begin(), S.end(), 0) == S.end())
    throw PreconditionViolated("0 must be a spoke type");
  return v.index % spoke_gcd(m, S);
}

namespace {

void fill_cells(GridRepresentation& rep) {
  rep.cell_of_component.assign(rep.g_plus_1, {-1, -1});
  for (int i = 0; i <= rep.mu; ++i)
    for (int j = 0; j <= rep.lambda; ++j) {
      if (!rep.in_grid(i, j)) continue;
      auto& slot = rep.cell_of_component[rep.offset(i, j) % rep.g_plus_1];
      if (slot.first >= 0) throw PreconditionViolated("grid cells are not distinct components");
      slot = {i, j};
    }
}

}  // namespace

GridRepresentation uniform_params(int m, const std::vector<int>& S, int a, int b) {
  a = static_cast<int>(mod(a, m));
  b = static_cast<int>(mod(b, m));
  const int G = spoke_gcd(m, S);
  if (G <= 1) throw PreconditionViolated("H(m;S) is connected");
  if (2 * b == m || 2 * a == m) throw HalfTurnType("a or b equals m/2");
  const int d = static_cast<int>(gcd(G, b));
  if (d <= 1) throw PreconditionViolated("b is coprime to gcd(m,S)");
  if (gcd(d, a) != 1) throw PreconditionViolated("gcd(m,S,a,b) > 1: B(m;a,S,b) is disconnected");
  GridRepresentation rep;
  rep.kind = GridRepresentation::Kind::Uniform;
  rep.m = m;
  rep.a = a;
  rep.b = b;
  rep.g_plus_1 = G;
  rep.lambda = d - 1;
  rep.mu = G / d - 1;
  rep.rho = rep.lambda;
  fill_cells(rep);
  return rep;
}

GridRepresentation uniform_params(int m, const std::vector<int>& S, int b) {
  return uniform_params(m, S, 1, b);
}

GridRepresentation nonuniform_params(int m, const std::vector<int>& S, int a, int b) {
  if (m <= 5) throw TooSmall("m must exceed 5");
  a = static_cast<int>(mod(a, m));
  b = static_cast<int>(mod(b, m));
  const int G = spoke_gcd(m, S);
  if (G <= 1) throw PreconditionViolated("H(m;S) is connected");
  if (2 * b == m || 2 * a == m) throw HalfTurnType("a or b equals m/2");
  if (gcd(a, G) != 1 || gcd(b, G) != 1) throw NotCoprime("a and b must be coprime to gcd(m,S)");
  if (mod(b - a, G) == 0 || mod(b + a, G) == 0) throw CongruentTypes("b is congruent to +-a");
  GridRepresentation rep;
  rep.kind = GridRepresentation::Kind::NonUniform;
  rep.m = m;
  rep.a = a;
  rep.g_plus_1 = G;
  rep.h = static_cast<int>(mod(static_cast<std::int64_t>(b) * inverse_mod(a, G), G));
  rep.h_star = std::min(rep.h, G - rep.h);
  rep.b_negated = rep.h > G / 2;
  rep.b = rep.b_negated ? static_cast<int>(mod(-b, m)) : b;
  rep.lambda = rep.h_star - 1;
  rep.mu = (G - 1) / rep.h_star;
  rep.rho = (G - 1) % rep.h_star;
  fill_cells(rep);
  return rep;
}

std::vector<std::pair<int, int>> grid_assign(const GridRepresentation& rep) {
  return rep.cell_of_component;
}

Vertex coord_vertex(const GridRepresentation& rep, const GridCoord& c) {
  if (!rep.in_grid(c.i, c.j))
    throw OutOfGrid("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
  // Component vertices are spaced gcd(m,S) apart.
  const std::int64_t step = static_cast<std::int64_t>(c.x) * rep.g_plus_1;
  return {c.layer, static_cast<int>(mod(step + rep.offset(c.i, c.j), rep.m))};
}

}  // namespace bicirc
