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

// Random instances for each construction family, plus checks that do not
// go through the library's validator.

#pragma once

#include <optional>
#include <random>
#include <tuple>

#include "bicirc/base_solver.hpp"
#include "bicirc/constructions.hpp"
#include "representation_oracle.hpp"
#include "test_oracle.hpp"

namespace bicirc::testing {

inline BruteGraph brute_abstract(const AdjacencyView& g) {
  BruteGraph b;
  b.n = g.size();
  b.adj.resize(b.n);
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.neighbors(v)) b.add(v, w);
  return b;
}

inline bool valid_abstract_cycle(const AdjacencyView& g, const std::vector<int>& c) {
  BruteGraph b = brute_abstract(g);
  if (static_cast<int>(c.size()) != b.n) return false;
  std::set<int> seen(c.begin(), c.end());
  if (static_cast<int>(seen.size()) != b.n || *seen.begin() < 0 || *seen.rbegin() >= b.n) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!b.adj[c[i]].count(c[(i + 1) % c.size()])) return false;
  return true;
}

inline std::vector<int> multiples(std::mt19937& rng, int G, int k, int count) {
  std::uniform_int_distribution<int> X(1, k - 1);
  std::vector<int> S{0};
  for (int i = 0; i < count; ++i) S.push_back(G * X(rng));
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

// B(m;a,S,b) with gcd(gcd(m,S), b) = d strictly between 1 and gcd(m,S).
inline std::optional<std::tuple<BicirculantSpec, int, int>> random_uniform(std::mt19937& rng, int m_max) {
  std::uniform_int_distribution<int> Gd(4, m_max / 2);
  const int G = Gd(rng);
  std::uniform_int_distribution<int> K(2, std::max(2, m_max / G));
  const int m = G * K(rng);
  if (m > m_max) return std::nullopt;
  std::uniform_int_distribution<int> n(1, 3);
  std::vector<int> S = multiples(rng, G, m / G, n(rng));
  if (S.size() < 2 || gcd_all(m, S) != G) return std::nullopt;
  std::uniform_int_distribution<int> A(1, m - 1);
  const int a = A(rng), b = A(rng);
  const int d = std::gcd(G, b);
  if (d <= 1 || d == G || std::gcd(d, a) != 1 || 2 * a == m || 2 * b == m) return std::nullopt;
  return std::make_tuple(make(m, {a}, S, {b}), a, b);
}

// Outer edges stay in a row between neighbouring columns, inner edges stay in
// a column between neighbouring rows (inside the cell for a single row).
inline bool grid_discipline(const GridRepresentation& rep, const HamiltonWitness& w) {
  const auto& s = w.sequence;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const Vertex& x = s[p];
    const Vertex& y = s[(p + 1) % s.size()];
    if (x.layer != y.layer) continue;
    auto cx = rep.cell_of_component[md(x.index, rep.g_plus_1)];
    auto cy = rep.cell_of_component[md(y.index, rep.g_plus_1)];
    if (x.layer == Layer::Outer) {
      if (cx.first != cy.first || std::abs(cx.second - cy.second) != 1) return false;
    } else {
      const int step = rep.mu == 0 ? 0 : 1;
      if (cx.second != cy.second || std::abs(cx.first - cy.first) != step) return false;
    }
  }
  return true;
}

// A cycle through exactly the cells [0,rows) x [0,cols).
inline bool valid_partial_cycle(const BicirculantSpec& s, const HamiltonWitness& w,
                                const GridRepresentation& rep, int rows, int cols) {
  BruteGraph g = brute_graph(s);
  const int G = rep.g_plus_1;
  const std::size_t want = static_cast<std::size_t>(rows) * cols * (2 * s.m / G);
  if (w.sequence.size() != want) return false;
  std::set<int> seen;
  for (const auto& v : w.sequence) {
    auto [i, j] = rep.cell_of_component[md(v.index, G)];
    if (i < 0 || i >= rows || j < 0 || j >= cols) return false;
    seen.insert(vid(s.m, v));
  }
  if (seen.size() != want) return false;
  for (std::size_t p = 0; p < want; ++p)
    if (!g.adj[vid(s.m, w.sequence[p])].count(vid(s.m, w.sequence[(p + 1) % want]))) return false;
  return true;
}

inline std::optional<HookedComponentData> hooked_data(const BicirculantSpec& K, int b) {
  AdjacencyView g = AdjacencyView::from_spec(K);
  auto cyc = hamilton_cycle(g, {});
  auto path = hamilton_path(g, outer(0), outer(md(b, K.m)), {});
  if (!cyc || !path) return std::nullopt;
  return HookedComponentData{K, *cyc, *path};
}

struct HookedInstance {
  BicirculantSpec spec;
  int a = 0, b = 0, c = 0, delta = 0;
  HookedComponentData data;
};

// delta copies of K = B(m';a',S',b') joined by spokes of type c; every spoke
// type shares the factor g with m.
inline std::optional<HookedInstance> random_hooked(std::mt19937& rng) {
  std::uniform_int_distribution<int> D(2, 5), Gd(2, 5), M(2, 4), n(0, 2);
  const int delta = D(rng), g = Gd(rng);
  if (std::gcd(g, delta) != 1) return std::nullopt;
  const int mk = g * M(rng), m = delta * mk;
  std::uniform_int_distribution<int> X(1, mk / g - 1), Y(1, mk - 1), C(1, m / g - 1);
  std::vector<int> Sk{0};
  for (int k = n(rng) + 1; k > 0; --k) Sk.push_back(g * X(rng));
  const int ak = Y(rng), bk = Y(rng);
  if (2 * ak == mk || 2 * bk == mk) return std::nullopt;
  BicirculantSpec K = make(mk, {ak}, Sk, {bk});
  if (!is_connected(K)) return std::nullopt;
  const int c = g * C(rng);
  if (std::gcd(c, delta) != 1) return std::nullopt;
  std::vector<int> S;
  for (int x : K.S) S.push_back(x * delta);
  S.push_back(c);
  auto data = hooked_data(K, bk);
  if (!data) return std::nullopt;
  HookedInstance h;
  h.spec = make(m, {ak * delta}, S, {bk * delta});
  h.a = ak * delta;
  h.b = bk * delta;
  h.c = c;
  h.delta = delta;
  h.data = *data;
  return h;
}

// B(m;a,S,b) with |S| >= 3 and b = +-a modulo gcd(m,S) > 1.
inline std::optional<std::tuple<BicirculantSpec, int, int>> random_congruent(std::mt19937& rng, int m_max) {
  std::uniform_int_distribution<int> Gd(2, m_max / 3);
  const int G = Gd(rng);
  std::uniform_int_distribution<int> K(3, std::max(3, m_max / G));
  const int m = G * K(rng);
  if (m > m_max || m <= 5) return std::nullopt;
  std::uniform_int_distribution<int> n(2, 3);
  std::vector<int> S = multiples(rng, G, m / G, n(rng));
  if (S.size() < 3 || gcd_all(m, S) != G) return std::nullopt;
  std::uniform_int_distribution<int> A(1, m - 1), T(0, m / G - 1), sign(0, 1);
  const int a = A(rng);
  const int b = md((sign(rng) ? a : -a) + static_cast<long long>(G) * T(rng), m);
  if (b == 0 || std::gcd(a, G) != 1 || 2 * a == m || 2 * b == m) return std::nullopt;
  return std::make_tuple(make(m, {a}, S, {b}), a, b);
}

}  // namespace bicirc::testing
