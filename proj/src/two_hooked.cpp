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

Vertex shift(const Vertex& v, std::int64_t t, int m) { return {v.layer, static_cast<int>(mod(v.index + t, m))}; }

bool contains(const std::vector<int>& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

HamiltonWitness two_hooked(const BicirculantSpec& spec, int a, int b, int c,
                           const HookedComponentData& data) {
  const int m = spec.m;
  a = static_cast<int>(mod(a, m));
  b = static_cast<int>(mod(b, m));
  c = static_cast<int>(mod(c, m));
  const BicirculantSpec& K = data.component;
  if (K.m <= 0 || m % K.m != 0) throw PreconditionViolated("component order must divide m");
  const int delta = m / K.m;
  if (delta < 2) throw PreconditionViolated("B(m;a,S',b) must be disconnected");
  if (!contains(spec.R, a) || !contains(spec.T, b) || !contains(spec.S, c))
    throw PreconditionViolated("a, b or c is not a type of the spec");
  if (gcd(c, delta) != 1) throw PreconditionViolated("type-c spokes do not link the components cyclically");
  if (mod(a, delta) != 0 || mod(b, delta) != 0) throw PreconditionViolated("a and b must be multiples of the component count");
  for (int x : K.S)
    if (!contains(spec.S, static_cast<int>(mod(static_cast<std::int64_t>(x) * delta, m))))
      throw PreconditionViolated("component spokes are not spokes of the spec");
  if (spoke_gcd(m, spec.S) <= 1) throw PreconditionViolated("gcd(m,S) must exceed 1");

  // Lift component labels to H'_0.
  auto lift = [&](const Vertex& v) { return Vertex{v.layer, v.index * delta}; };
  const auto& P = data.path.sequence;
  const auto& C = data.cycle.sequence;
  if (P.size() != static_cast<std::size_t>(2 * K.m) || C.size() != P.size())
    throw PreconditionViolated("component witnesses must be Hamiltonian");
  if (P.front() != outer(0) || lift(P.back()) != outer(b))
    throw PreconditionViolated("component path must run from u_0 to u_b");

  // An inner edge of the path, split into u_0..v_{y1} and v_{y2}..u_b.
  std::size_t cut = 0;
  for (std::size_t p = 0; p + 1 < P.size(); ++p)
    if (P[p].layer == Layer::Inner && P[p + 1].layer == Layer::Inner) {
      cut = p + 1;
      break;
    }
  if (cut == 0) throw MissingInnerEdge("component path has no inner edge");
  std::vector<Vertex> A, B;
  for (std::size_t p = 0; p < P.size(); ++p) (p < cut ? A : B).push_back(lift(P[p]));
  const int y1 = A.back().index, y2 = B.front().index;
  const bool plus = mod(y2 - y1 - b, m) == 0;
  if (!plus && mod(y2 - y1 + b, m) != 0) throw PreconditionViolated("path inner edge is not of type b");

  // v_0 .. v_b from the cycle: drop a type-b edge and translate.
  std::vector<Vertex> V;
  {
    const std::size_t L = C.size();
    for (std::size_t p = 0; p < L && V.empty(); ++p) {
      Vertex x = lift(C[p]), y = lift(C[(p + 1) % L]);
      if (x.layer != Layer::Inner || y.layer != Layer::Inner) continue;
      bool fwd = mod(y.index - x.index - b, m) == 0;
      if (!fwd && mod(x.index - y.index - b, m) != 0) continue;
      // Walk away from the removed edge, starting at its lower end v_y.
      std::vector<Vertex> seq;
      std::size_t from = fwd ? p : (p + 1) % L;
      for (std::size_t k = 0; k < L; ++k) {
        std::size_t idx = fwd ? (from + L - k) % L : (from + k) % L;
        seq.push_back(lift(C[idx]));
      }
      const int y0 = seq.front().index;
      for (auto& v : seq) v = shift(v, -y0, m);
      V = std::move(seq);
    }
  }
  if (V.empty()) throw PreconditionViolated("component cycle must contain outer and inner edges");

  const int gamma = delta - 1;
  EdgeBag bag(m);
  auto copy = [&](const std::vector<Vertex>& path, int i, std::int64_t t) {
    for (std::size_t p = 0; p + 1 < path.size(); ++p)
      bag.add(shift(path[p], t + static_cast<std::int64_t>(c) * i, m),
              shift(path[p + 1], t + static_cast<std::int64_t>(c) * i, m));
  };
  auto hook = [&](int i, std::int64_t z) {  // u^i_z v^{i+1}_z
    bag.add(outer(static_cast<int>(mod(z + static_cast<std::int64_t>(c) * i, m))),
            inner(static_cast<int>(mod(z + static_cast<std::int64_t>(c) * (i + 1), m))));
  };
  std::vector<Vertex> whole;
  for (const auto& v : P) whole.push_back(lift(v));
  copy(whole, 0, 0);
  std::int64_t t = 0;
  for (int i = 1; i <= gamma; ++i) {
    hook(i - 1, t);
    hook(i - 1, t + b);
    if (i == gamma) {
      copy(V, i, t);
      break;
    }
    t -= plus ? y1 : y2;
    copy(A, i, t);
    copy(B, i, t);
  }
  return HamiltonWitness::cycle(bag.trace_cycle(outer(0), static_cast<std::size_t>(2 * m)));
}

}  // namespace bicirc
