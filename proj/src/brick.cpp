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
#include <chrono>
#include <random>

#include "bicirc/constructions.hpp"
#include "bicirc/errors.hpp"

namespace bicirc {

std::vector<int> BrickProduct::degree_two(int layer) const {
  if (layer < 1 || layer > k) throw PreconditionViolated("layer out of range");
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    bool up = rung(i, layer), down = rung(i, layer - 1);
    if (!up && !down) out.push_back(id(i, layer));
  }
  return out;
}

AdjacencyView BrickProduct::graph(bool with_matching) const {
  std::vector<std::pair<int, int>> e;
  for (int t = 1; t <= k; ++t)
    for (int i = 0; i < n; ++i) {
      e.emplace_back(id(i, t), id((i + 1) % n, t));
      if (rung(i, t)) e.emplace_back(id(i, t), id(i, t + 1));
    }
  if (with_matching)
    for (auto [x, y] : matching) e.emplace_back(x, y);
  return AdjacencyView::from_edges(n * k, e);
}

BrickProduct brick_build(int n, int k) {
  if (n % 2 != 0) throw OddN("brick products need an even cycle length");
  if (n < 4) throw PreconditionViolated("n must be at least 4");
  if (k < 1) throw PreconditionViolated("k must be at least 1");
  BrickProduct bp{n, k, {}};
  if (k >= 2) {
    auto first = bp.degree_two(1), last = bp.degree_two(k);
    for (std::size_t j = 0; j < first.size(); ++j) bp.matching.emplace_back(first[j], last[j]);
  }
  return bp;
}

namespace {

// Follows the 2-factor made of every cross edge and, in layer l, the layer
// edges starting at position parity[l]. Returns the cycle if it is Hamiltonian.
std::optional<std::vector<int>> follow(int n, const std::vector<std::vector<int>>& layers,
                                       const std::vector<int>& layer_of,
                                       const std::vector<int>& pos, const std::vector<int>& cross,
                                       const std::vector<int>& parity) {
  auto mate = [&](int v) {
    const auto& L = layers[layer_of[v]];
    const int len = static_cast<int>(L.size());
    int p = pos[v];
    bool forward = ((p - parity[layer_of[v]]) % 2 + 2) % 2 == 0;
    return L[forward ? (p + 1) % len : (p - 1 + len) % len];
  };
  std::vector<int> seq;
  seq.reserve(n);
  int v = layers[0][0];
  bool via_cross = true;
  for (int steps = 0; steps < n; ++steps) {
    seq.push_back(v);
    v = via_cross ? cross[v] : mate(v);
    via_cross = !via_cross;
    if (v == seq.front()) break;
  }
  if (static_cast<int>(seq.size()) != n || v != seq.front()) return std::nullopt;
  return seq;
}

}  // namespace

std::optional<std::vector<int>> layered_cycle(int n, const std::vector<std::vector<int>>& layers,
                                              const std::vector<int>& cross,
                                              const SearchBudget& budget, bool allow_search) {
  std::vector<int> layer_of(n, -1), pos(n, -1);
  bool cubic = !layers.empty() && static_cast<int>(cross.size()) == n;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (layers[l].size() % 2 != 0) cubic = false;
    for (std::size_t p = 0; p < layers[l].size(); ++p) {
      int v = layers[l][p];
      if (v < 0 || v >= n || layer_of[v] >= 0) throw PreconditionViolated("layers must partition the vertices");
      layer_of[v] = static_cast<int>(l);
      pos[v] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < n && cubic; ++v)
    if (layer_of[v] < 0 || cross[v] < 0 || cross[v] >= n || cross[cross[v]] != v) cubic = false;

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  if (cubic) {
    const int k = static_cast<int>(layers.size());
    std::vector<int> parity(k, 0);
    if (k <= 12) {
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        for (int l = 0; l < k; ++l) parity[l] = mask >> l & 1;
        if (auto c = follow(n, layers, layer_of, pos, cross, parity)) return c;
      }
    } else {
      std::mt19937_64 rng(budget.seed);
      for (int tries = 0; tries < 4096 && elapsed() < budget.time_limit * 0.25; ++tries) {
        for (int l = 0; l < k; ++l) parity[l] = static_cast<int>(rng() & 1);
        if (auto c = follow(n, layers, layer_of, pos, cross, parity)) return c;
      }
    }
  }
  if (!allow_search) return std::nullopt;
  std::vector<std::pair<int, int>> e;
  for (const auto& L : layers)
    for (std::size_t p = 0; p < L.size(); ++p) e.emplace_back(L[p], L[(p + 1) % L.size()]);
  for (int v = 0; v < static_cast<int>(cross.size()); ++v)
    if (cross[v] > v) e.emplace_back(v, cross[v]);
  AdjacencyView g = AdjacencyView::from_edges(n, e);
  SearchBudget rest = budget;
  rest.time_limit = std::max(0.1, budget.time_limit - elapsed());
  SearchResult r = find_cycle(g, rest);
  if (r.verdict == SearchVerdict::Found) return r.order;
  return std::nullopt;
}

std::vector<int> brick_plus_matching_cycle(const BrickProduct& bp, const SearchBudget& budget) {
  const int total = bp.n * bp.k;
  std::vector<std::vector<int>> layers(bp.k);
  std::vector<int> cross(total, -1);
  for (int t = 1; t <= bp.k; ++t)
    for (int i = 0; i < bp.n; ++i) {
      layers[t - 1].push_back(bp.id(i, t));
      if (bp.rung(i, t)) {
        cross[bp.id(i, t)] = bp.id(i, t + 1);
        cross[bp.id(i, t + 1)] = bp.id(i, t);
      }
    }
  if (bp.k == 1) return layers[0];
  const auto first = bp.degree_two(1), last = bp.degree_two(bp.k);
  if (bp.matching.size() != first.size()) throw PreconditionViolated("matching must be perfect");
  for (auto [x, y] : bp.matching) {
    bool ok = std::find(first.begin(), first.end(), x) != first.end() &&
              std::find(last.begin(), last.end(), y) != last.end();
    if (!ok || cross[x] >= 0 || cross[y] >= 0)
      throw PreconditionViolated("matching must pair boundary vertices of degree two");
    cross[x] = y;
    cross[y] = x;
  }
  auto c = layered_cycle(total, layers, cross, budget, true);
  if (!c) throw ConstructionFailed("no Hamilton cycle found in the brick product with matching");
  return *c;
}

}  // namespace bicirc
