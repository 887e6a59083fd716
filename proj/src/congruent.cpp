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

#include <algorithm>

#include "bicirc/constructions.hpp"
#include "bicirc/errors.hpp"
#include "edge_bag.hpp"

namespace bicirc {

using detail::EdgeBag;

namespace {

struct Setup {
  int m = 0, G = 0;
  int a = 0;
  int b = 0;  // re-signed so that b = a (mod G)
};

bool contains(const std::vector<int>& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

Setup check(const BicirculantSpec& spec, int a, int b) {
  const int m = spec.m;
  a = static_cast<int>(mod(a, m));
  b = static_cast<int>(mod(b, m));
  if (m <= 5) throw TooSmall("m must exceed 5");
  if (spec.S.size() < 3) throw PreconditionViolated("|S| >= 3 required");
  if (!contains(spec.S, 0)) throw PreconditionViolated("spec must be normalized");
  if (!contains(spec.R, a) || !contains(spec.T, b)) throw PreconditionViolated("a or b is not a type of the spec");
  if (2 * a == m || 2 * b == m) throw HalfTurnType("a or b equals m/2");
  const int G = spoke_gcd(m, spec.S);
  if (G <= 1) throw PreconditionViolated("H(m;S) is connected");
  if (gcd(a, G) != 1 || gcd(b, G) != 1) throw NotCoprime("a and b must be coprime to gcd(m,S)");
  Setup s{m, G, a, b};
  if (mod(b - a, G) != 0) {
    if (mod(b + a, G) != 0) throw PreconditionViolated("b is not congruent to +-a");
    s.b = static_cast<int>(mod(-b, m));
  }
  return s;
}

Vertex shift(const Vertex& v, std::int64_t t, int m) { return {v.layer, static_cast<int>(mod(v.index + t, m))}; }

// Equal types, odd number of components.
HamiltonWitness equal_types(const Setup& s, const std::vector<Vertex>& c) {
  const int g = s.G - 1, m = s.m, L = static_cast<int>(c.size());
  EdgeBag bag(m);
  auto at = [&](int i, int p) { return shift(c[p], static_cast<std::int64_t>(s.a) * i, m); };
  for (int p = 0; p + 1 < L; ++p) bag.add(at(0, p), at(0, p + 1));  // v_s P u_0
  for (int i = 1; i < g; ++i)
    for (int p = 1; p + 1 < L; ++p) bag.add(at(i, p), at(i, p + 1));  // v_0 .. v_s
  for (int p = 1; p + 1 < L; ++p) bag.add(at(g, p), at(g, p + 1));
  bag.add(at(g, L - 1), at(g, 0));  // C minus u_0 v_0
  for (int i = 0; i < g; ++i) {
    bag.add(at(i, 0), at(i + 1, 0));
    if (i % 2 == 0)
      bag.add(at(i, L - 1), at(i + 1, L - 1));
    else
      bag.add(at(i, 1), at(i + 1, 1));
  }
  return HamiltonWitness::cycle(bag.trace_cycle(outer(0), static_cast<std::size_t>(2 * m)));
}

// Congruent but unequal types, odd number of components. `c` starts at an
// outer vertex; c[1] plays v_0 and its type-b partner one layer up plays
// v_{-a+b}.
std::optional<HamiltonWitness> general_odd(const Setup& s, const std::vector<Vertex>& c) {
  const int g = s.G - 1, m = s.m, L = static_cast<int>(c.size());
  const Vertex w{Layer::Inner, static_cast<int>(mod(c[1].index + s.b - s.a, m))};
  auto it = std::find(c.begin(), c.end(), w);
  if (it == c.end()) return std::nullopt;
  const int pw = static_cast<int>(it - c.begin());
  if (pw <= 1 || pw + 1 >= L) return std::nullopt;  // u_p would be u_0
  const int pp = pw + 1;                            // u_p
  EdgeBag bag(m);
  auto at = [&](int i, int p) { return shift(c[p], static_cast<std::int64_t>(s.a) * i, m); };
  auto arc = [&](int i, int from, int to) {  // c[from..to] along the cycle
    for (int p = from; p != to; p = (p + 1) % L) bag.add(at(i, p), at(i, (p + 1) % L));
  };
  arc(0, 1, 0);  // C minus u_0 v_0
  for (int i = 1; i < g; ++i) {
    arc(i, pp, 0);  // u_p .. v_s u_0
    arc(i, 1, pw);  // v_0 .. w
  }
  arc(g, pp, pw);  // C minus u_p w
  for (int i = 0; i < g; ++i) {
    if (i % 2 == 0)
      bag.add(at(i, 0), at(i + 1, 0));
    else
      bag.add(at(i, pp), at(i + 1, pp));
    bag.add(at(i, 1), at(i + 1, pw));
  }
  if (!bag.single_cycle(static_cast<std::size_t>(2 * m))) return std::nullopt;
  return HamiltonWitness::cycle(bag.trace_cycle(outer(0), static_cast<std::size_t>(2 * m)));
}

// Layer i is H_0 translated by a*i; outer links join even layers to the next,
// type-b inner links join odd layers to the next (the last one wraps to
// layer 0). Inside layer i the spokes of type choice[i] complete a 2-factor.
std::optional<HamiltonWitness> even_two_factor(const Setup& s, const std::vector<int>& choice) {
  const int m = s.m, G = s.G;
  EdgeBag bag(m);
  for (int i = 0; i < G; ++i) {
    const std::int64_t base = static_cast<std::int64_t>(s.a) * i;
    for (int x = 0; x < m; x += G) {
      Vertex u = outer(static_cast<int>(mod(base + x, m)));
      bag.add(u, shift(inner(u.index), choice[i], m));
      if (i % 2 == 0)
        bag.add(u, shift(u, s.a, m));
      else
        bag.add(inner(u.index), shift(inner(u.index), s.b, m));
    }
  }
  if (!bag.single_cycle(static_cast<std::size_t>(2 * m))) return std::nullopt;
  return HamiltonWitness::cycle(bag.trace_cycle(outer(0), static_cast<std::size_t>(2 * m)));
}

// Spoke types used alternately by c, when c is a two-spoke cycle.
std::optional<std::pair<int, int>> alternating_types(const std::vector<Vertex>& c, int m) {
  auto type = [&](std::size_t p) {
    const Vertex& x = c[p];
    const Vertex& y = c[(p + 1) % c.size()];
    if (x.layer == y.layer) return -1;
    int u = x.layer == Layer::Outer ? x.index : y.index;
    int v = x.layer == Layer::Outer ? y.index : x.index;
    return static_cast<int>(mod(v - u, m));
  };
  int t0 = type(0), t1 = type(1);
  if (t0 < 0 || t1 < 0) return std::nullopt;
  for (std::size_t p = 0; p < c.size(); ++p)
    if (type(p) != (p % 2 == 0 ? t0 : t1)) return std::nullopt;
  return std::make_pair(t0, t1);
}

HamiltonWitness even_case(const Setup& s, const BicirculantSpec& spec, const ComponentCycle& cyc,
                          const SearchBudget& budget) {
  const int m = s.m, G = s.G, h = G / 2;
  const std::int64_t base = static_cast<std::int64_t>(h) * (s.a + s.b);
  // Each layer contributes +e (odd) or -e (even) to the return translation;
  // the 2-factor is one cycle iff that translation has order m/G.
  std::vector<std::pair<int, int>> pairs;
  if (auto p = alternating_types(cyc.cycle, m)) pairs.push_back(*p);
  for (int x : spec.S)
    for (int y : spec.S)
      if (x < y && gcd(y - x, m) == G) pairs.emplace_back(x, y);
  for (auto [e0, e1] : pairs) {
    const std::int64_t d = e1 - e0;
    for (int j = 0; j <= h; ++j)
      for (int sign : {1, -1}) {
        // e0 everywhere cancels; moving j odd (even) layers to e1 adds (subtracts) j*d.
        if (gcd(mod(base + sign * j * d, m), m) != G) continue;
        std::vector<int> choice(G, e0);
        for (int i = sign > 0 ? 1 : 0, moved = 0; i < G && moved < j; i += 2, ++moved) choice[i] = e1;
        if (auto w = even_two_factor(s, choice)) return *w;
      }
  }
  // General fallback: copies of the component cycle as layers, cross edges as
  // above, then the layered engine with search.
  std::vector<std::vector<int>> layers(G);
  std::vector<int> cross(2 * m, -1);
  EdgeBag ids(m);
  for (int i = 0; i < G; ++i) {
    const std::int64_t off = static_cast<std::int64_t>(s.a) * i;
    for (const auto& v : cyc.cycle) layers[i].push_back(ids.id(shift(v, off, m)));
    for (int x = 0; x < m; x += G) {
      Vertex u = outer(static_cast<int>(mod(off + x, m)));
      Vertex p = i % 2 == 0 ? shift(u, s.a, m) : shift(inner(u.index), s.b, m);
      Vertex q = i % 2 == 0 ? u : inner(u.index);
      cross[ids.id(q)] = ids.id(p);
      cross[ids.id(p)] = ids.id(q);
    }
  }
  auto order = layered_cycle(2 * m, layers, cross, budget, true);
  if (!order) throw ConstructionFailed("no Hamilton cycle in the layered graph");
  std::vector<Vertex> seq;
  for (int id : *order) seq.push_back(ids.vertex(id));
  return HamiltonWitness::cycle(std::move(seq));
}

}  // namespace

StrategyTag congruent_route(const BicirculantSpec& spec, int a, int b) {
  Setup s = check(spec, a, b);
  if (s.G % 2 == 0) return StrategyTag::CongruentEven_Brick;
  if (mod(s.b - s.a, s.m) == 0 || mod(s.b + s.a, s.m) == 0) return StrategyTag::CongruentOdd_EqualTypes;
  return StrategyTag::CongruentOdd_General;
}

HamiltonWitness congruent_case(const BicirculantSpec& spec, int a, int b, const ComponentCycle& cyc,
                               const SearchBudget& budget) {
  Setup s = check(spec, a, b);
  const int m = s.m;
  if (s.G % 2 == 0) return even_case(s, spec, cyc, budget);
  if (mod(s.b - s.a, m) == 0 || mod(s.b + s.a, m) == 0) {
    s.b = s.a;  // the type a is then also an inner type
    if (!contains(spec.T, s.b)) throw PreconditionViolated("a is not an inner type");
    return equal_types(s, cyc.cycle);
  }
  // Any outer vertex of the cycle may play u_0, in either direction.
  const auto& c = cyc.cycle;
  const int L = static_cast<int>(c.size());
  for (int r = 0; r < L; r += 2)
    for (bool rev : {false, true}) {
      std::vector<Vertex> d(L);
      for (int j = 0; j < L; ++j) d[j] = c[rev ? (r - j + L) % L : (r + j) % L];
      if (d[0].layer != Layer::Outer) continue;
      if (auto w = general_odd(s, d)) return *w;
    }
  throw ConstructionFailed("no orientation of the component cycle supports the stitching");
}

HamiltonWitness congruent_case(const BicirculantSpec& spec, int a, int b, const SearchBudget& budget) {
  check(spec, a, b);
  return congruent_case(spec, a, b, structured_component_path(spec.m, spec.S, budget), budget);
}

}  // namespace bicirc
