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

#include "bicirc/base_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <random>

#include "bicirc/errors.hpp"

namespace bicirc {

using Clock = std::chrono::steady_clock;

// ---- AdjacencyView ---------------------------------------------------------

AdjacencyView AdjacencyView::from_spec(const BicirculantSpec& spec) {
  const int m = spec.m;
  AdjacencyView g;
  g.nbrs_.assign(2 * m, {});
  for (const Edge& e : edges(spec)) {
    int a = e.a.layer == Layer::Outer ? e.a.index : m + e.a.index;
    int b = e.b.layer == Layer::Outer ? e.b.index : m + e.b.index;
    g.nbrs_[a].push_back(b);
    g.nbrs_[b].push_back(a);
  }
  for (auto& l : g.nbrs_) std::sort(l.begin(), l.end());
  g.labels_.reserve(2 * m);
  for (int i = 0; i < m; ++i) g.labels_.push_back(outer(i));
  for (int i = 0; i < m; ++i) g.labels_.push_back(inner(i));
  g.spec_m_ = m;
  return g;
}

AdjacencyView AdjacencyView::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                        std::vector<Vertex> labels) {
  AdjacencyView g;
  g.nbrs_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a == b) throw PreconditionViolated("self-loop");
    g.nbrs_[a].push_back(b);
    g.nbrs_[b].push_back(a);
  }
  for (auto& l : g.nbrs_) {
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw PreconditionViolated("parallel edge");
  }
  g.labels_ = std::move(labels);
  for (int i = 0; i < static_cast<int>(g.labels_.size()); ++i) g.index_[g.labels_[i]] = i;
  return g;
}

bool AdjacencyView::has_edge(int a, int b) const {
  return std::binary_search(nbrs_[a].begin(), nbrs_[a].end(), b);
}

int AdjacencyView::id(const Vertex& v) const {
  if (spec_m_ >= 0) {
    if (v.index < 0 || v.index >= spec_m_) throw PreconditionViolated("vertex out of range");
    return v.layer == Layer::Outer ? v.index : spec_m_ + v.index;
  }
  auto it = index_.find(v);
  if (it == index_.end()) throw PreconditionViolated("unknown vertex " + to_string(v));
  return it->second;
}

int AdjacencyView::add_vertex(const std::vector<int>& to) {
  int z = size();
  nbrs_.emplace_back(to.begin(), to.end());
  std::sort(nbrs_.back().begin(), nbrs_.back().end());
  for (int w : to) {
    auto& l = nbrs_[w];
    l.insert(std::upper_bound(l.begin(), l.end(), z), z);
  }
  if (labelled()) labels_.push_back(Vertex{Layer::Outer, -1});
  return z;
}

// ---- engines ---------------------------------------------------------------

namespace {

void rotate_to_min(std::vector<int>& cyc) {
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  // Fixed orientation: the smaller neighbour of the first vertex comes next.
  if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
}

// Cheap necessary conditions; returns false when no Hamilton cycle exists.
bool passes_prefilter(const AdjacencyView& g) {
  const int n = g.size();
  for (int v = 0; v < n; ++v)
    if (g.neighbors(v).size() < 2) return false;
  std::vector<int> colour(n, -1);
  std::deque<int> q{0};
  colour[0] = 0;
  int seen = 1, count[2] = {1, 0};
  bool bipartite = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v)) {
      if (colour[w] < 0) {
        colour[w] = colour[v] ^ 1;
        ++count[colour[w]];
        ++seen;
        q.push_back(w);
      } else if (colour[w] == colour[v]) {
        bipartite = false;
      }
    }
  }
  if (seen != n) return false;
  if (bipartite && count[0] != count[1]) return false;
  return true;
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}
  bool passed() const { return Clock::now() > end_; }

 private:
  Clock::time_point end_;
};

class Backtracker {
 public:
  Backtracker(const AdjacencyView& g, const SearchBudget& b)
      : g_(g), n_(g.size()), budget_(b), deadline_(b.time_limit) {}

  SearchResult run() {
    SearchResult res;
    root_ = 0;
    for (int v = 1; v < n_; ++v)
      if (g_.neighbors(v).size() < g_.neighbors(root_).size()) root_ = v;
    vis_.assign(n_, 0);
    free_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) free_[v] = static_cast<int>(g_.neighbors(v).size());
    root_adj_.assign(n_, 0);
    for (int w : g_.neighbors(root_)) root_adj_[w] = 1;
    visit(root_);
    bool found = search();
    res.nodes = nodes_;
    if (found) {
      res.verdict = SearchVerdict::Found;
      res.order = path_;
      rotate_to_min(res.order);
    } else {
      res.verdict = aborted_ ? SearchVerdict::Inconclusive : SearchVerdict::None;
    }
    return res;
  }

 private:
  void visit(int v) {
    vis_[v] = 1;
    for (int w : g_.neighbors(v)) --free_[w];
    path_.push_back(v);
  }
  void unvisit(int v) {
    path_.pop_back();
    for (int w : g_.neighbors(v)) ++free_[w];
    vis_[v] = 0;
  }
  // Remaining ways in or out of an unvisited vertex.
  int avail(int x, int head) const {
    return free_[x] + (g_.has_edge(x, head) ? 1 : 0) + root_adj_[x];
  }
  bool feasible(int head, int prev) const {
    if (static_cast<int>(path_.size()) == n_) return true;
    if (free_[root_] + (g_.has_edge(root_, head) ? 1 : 0) < 1) return false;
    for (int w : g_.neighbors(head))
      if (!vis_[w] && avail(w, head) < 2) return false;
    for (int w : g_.neighbors(prev))
      if (!vis_[w] && avail(w, head) < 2) return false;
    return true;
  }
  // Unvisited vertices must stay connected to each other.
  bool connected() {
    int left = n_ - static_cast<int>(path_.size());
    if (left <= 1) return true;
    int start = -1;
    for (int w : g_.neighbors(path_.back()))
      if (!vis_[w]) {
        start = w;
        break;
      }
    if (start < 0) return false;
    mark_.assign(n_, 0);
    stack_.clear();
    stack_.push_back(start);
    mark_[start] = 1;
    int reached = 1;
    while (!stack_.empty()) {
      int v = stack_.back();
      stack_.pop_back();
      for (int w : g_.neighbors(v))
        if (!vis_[w] && !mark_[w]) {
          mark_[w] = 1;
          ++reached;
          stack_.push_back(w);
        }
    }
    return reached == left;
  }

  bool search() {
    if (++nodes_ > budget_.node_limit || ((nodes_ & 1023) == 0 && deadline_.passed())) {
      aborted_ = true;
      return false;
    }
    const int head = path_.back();
    if (static_cast<int>(path_.size()) == n_) return g_.has_edge(head, root_);
    if (n_ <= 256 || (nodes_ & 7) == 0)
      if (!connected()) return false;

    std::vector<int> cand;
    int forced = -1;
    for (int w : g_.neighbors(head)) {
      if (vis_[w]) continue;
      if (free_[w] + root_adj_[w] == 1 && static_cast<int>(path_.size()) + 1 < n_) {
        if (forced >= 0) return false;
        forced = w;
      }
      cand.push_back(w);
    }
    if (forced >= 0) cand = {forced};
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return free_[a] < free_[b]; });
    for (int w : cand) {
      visit(w);
      if (feasible(w, head) && search()) return true;
      unvisit(w);
      if (aborted_) return false;
    }
    return false;
  }

  const AdjacencyView& g_;
  int n_;
  SearchBudget budget_;
  Deadline deadline_;
  int root_ = 0;
  std::vector<char> vis_, root_adj_, mark_;
  std::vector<int> free_, path_, stack_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchResult held_karp_cycle(const AdjacencyView& g) {
  const int n = g.size();
  SearchResult res;
  res.verdict = SearchVerdict::None;
  if (n < 3) return res;
  if (n > kExactRange) throw PreconditionViolated("subset DP limited to 24 vertices");
  const int k = n - 1;
  std::vector<std::uint32_t> adjm(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v))
      if (w > 0) adjm[v] |= 1u << (w - 1);
  const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
  std::vector<std::uint32_t> dp(std::size_t{1} << k, 0);
  for (int w : g.neighbors(0)) dp[1u << (w - 1)] |= 1u << (w - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    std::uint32_t reach = 0;
    for (std::uint32_t e = ends; e; e &= e - 1) reach |= adjm[std::countr_zero(e) + 1];
    reach &= ~mask;
    for (std::uint32_t r = reach; r; r &= r - 1) {
      std::uint32_t bit = r & (~r + 1);
      dp[mask | bit] |= bit;
    }
  }
  res.nodes = full;
  std::uint32_t ends = dp[full] & adjm[0];
  if (!ends) return res;
  std::vector<int> order;
  int v = std::countr_zero(ends);
  std::uint32_t mask = full;
  while (true) {
    order.push_back(v + 1);
    std::uint32_t prev = mask & ~(1u << v);
    if (!prev) break;
    std::uint32_t cand = dp[prev] & adjm[v + 1];
    v = std::countr_zero(cand);
    mask = prev;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  rotate_to_min(order);
  res.verdict = SearchVerdict::Found;
  res.order = std::move(order);
  return res;
}

SearchResult dfs_cycle(const AdjacencyView& g, const SearchBudget& budget) {
  if (g.size() < 3) return {SearchVerdict::None, {}, 0};
  return Backtracker(g, budget).run();
}

SearchResult rotation_extension_cycle(const AdjacencyView& g, const SearchBudget& budget) {
  const int n = g.size();
  SearchResult res;
  if (n < 3) {
    res.verdict = SearchVerdict::None;
    return res;
  }
  std::mt19937_64 rng(budget.seed);
  Deadline deadline(budget.time_limit);
  std::vector<int> path, pos(n, -1), free_deg(n);
  path.reserve(n);
  std::uint64_t steps = 0;
  const std::uint64_t stall_limit = 20ull * static_cast<std::uint64_t>(n) + 1000;

  auto append = [&](int v) {
    pos[v] = static_cast<int>(path.size());
    path.push_back(v);
    for (int w : g.neighbors(v)) --free_deg[w];
  };
  // Pósa rotation: the end is joined to path[i]; path[i+1] becomes the end.
  auto rotate_at = [&](int i) {
    std::reverse(path.begin() + i + 1, path.end());
    for (int k = i + 1; k < static_cast<int>(path.size()); ++k) pos[path[k]] = k;
  };
  auto flip = [&]() {
    std::reverse(path.begin(), path.end());
    for (int k = 0; k < static_cast<int>(path.size()); ++k) pos[path[k]] = k;
  };

  for (int restart = 0;; ++restart) {
    path.clear();
    std::fill(pos.begin(), pos.end(), -1);
    for (int v = 0; v < n; ++v) free_deg[v] = static_cast<int>(g.neighbors(v).size());
    append(restart == 0 ? n - 1 : static_cast<int>(rng() % n));
    std::uint64_t stall = 0;
    while (true) {
      if (++steps > budget.node_limit || ((steps & 255) == 0 && deadline.passed())) {
        res.nodes = steps;
        res.verdict = SearchVerdict::Inconclusive;
        return res;
      }
      const int end = path.back();
      const int len = static_cast<int>(path.size());
      // Extend to the unvisited neighbour with fewest unvisited neighbours.
      int best = -1, best_deg = 1 << 30, ties = 0;
      for (int w : g.neighbors(end)) {
        if (pos[w] >= 0) continue;
        if (free_deg[w] < best_deg) {
          best = w;
          best_deg = free_deg[w];
          ties = 1;
        } else if (free_deg[w] == best_deg && rng() % ++ties == 0) {
          best = w;
        }
      }
      if (best >= 0) {
        append(best);
        stall = 0;
        continue;
      }
      if (len == n && g.has_edge(end, path.front())) {
        res.verdict = SearchVerdict::Found;
        res.order = path;
        res.nodes = steps;
        rotate_to_min(res.order);
        return res;
      }
      if (++stall > stall_limit) break;
      // Prefer a rotation whose new end can extend or close.
      int pick = -1;
      std::vector<int> options;
      for (int w : g.neighbors(end)) {
        int i = pos[w];
        if (i >= len - 2) continue;
        int ne = path[i + 1];
        bool good = (len < n) ? free_deg[ne] > 0 : g.has_edge(ne, path.front());
        if (good) {
          pick = i;
          break;
        }
        options.push_back(i);
      }
      if (pick < 0) {
        if (options.empty() || rng() % 4 == 0) {
          flip();
          continue;
        }
        pick = options[rng() % options.size()];
      }
      rotate_at(pick);
    }
  }
}

SearchResult find_cycle(const AdjacencyView& g, const SearchBudget& budget) {
  const int n = g.size();
  SearchResult res;
  res.verdict = SearchVerdict::None;
  if (n < 3 || !passes_prefilter(g)) return res;
  using A = SearchBudget::Algorithm;
  if (budget.algorithm == A::DPOnly) {
    if (n > kExactRange) return {SearchVerdict::Inconclusive, {}, 0};
    return held_karp_cycle(g);
  }
  if (budget.algorithm == A::AutoDPorDFS && n <= kExactRange) return held_karp_cycle(g);
  if (budget.heuristic && n > kExactRange) {
    SearchBudget h = budget;
    h.time_limit = budget.time_limit * 0.6;
    res = rotation_extension_cycle(g, h);
    if (res.verdict == SearchVerdict::Found) return res;
    SearchBudget rest = budget;
    rest.time_limit = budget.time_limit * 0.4;
    rest.node_limit = budget.node_limit / 2 + 1;
    SearchResult d = dfs_cycle(g, rest);
    d.nodes += res.nodes;
    return d;
  }
  return dfs_cycle(g, budget);
}

// Pósa rotations with the start pinned at s; t is held back until every other
// vertex is on the path.
SearchResult rotation_extension_path(const AdjacencyView& g, int s, int t, const SearchBudget& budget) {
  const int n = g.size();
  SearchResult res;
  if (s == t || n < 2) {
    res.verdict = SearchVerdict::None;
    return res;
  }
  std::mt19937_64 rng(budget.seed);
  Deadline deadline(budget.time_limit);
  std::vector<int> path, pos(n, -1), free_deg(n);
  path.reserve(n);
  std::uint64_t steps = 0;
  const std::uint64_t stall_limit = 20ull * static_cast<std::uint64_t>(n) + 1000;

  auto append = [&](int v) {
    pos[v] = static_cast<int>(path.size());
    path.push_back(v);
    for (int w : g.neighbors(v)) --free_deg[w];
  };
  auto rotate_at = [&](int i) {
    std::reverse(path.begin() + i + 1, path.end());
    for (int k = i + 1; k < static_cast<int>(path.size()); ++k) pos[path[k]] = k;
  };

  while (true) {
    path.clear();
    std::fill(pos.begin(), pos.end(), -1);
    for (int v = 0; v < n; ++v) free_deg[v] = static_cast<int>(g.neighbors(v).size());
    for (int w : g.neighbors(t)) --free_deg[w];
    pos[t] = n;  // never extended into
    append(s);
    std::uint64_t stall = 0;
    while (true) {
      if (++steps > budget.node_limit || ((steps & 255) == 0 && deadline.passed())) {
        res.nodes = steps;
        res.verdict = SearchVerdict::Inconclusive;
        return res;
      }
      const int end = path.back();
      const int len = static_cast<int>(path.size());
      if (len == n - 1 && g.has_edge(end, t)) {
        path.push_back(t);
        res.verdict = SearchVerdict::Found;
        res.order = std::move(path);
        res.nodes = steps;
        return res;
      }
      int best = -1, best_deg = 1 << 30, ties = 0;
      for (int w : g.neighbors(end)) {
        if (pos[w] >= 0) continue;
        if (free_deg[w] < best_deg) {
          best = w;
          best_deg = free_deg[w];
          ties = 1;
        } else if (free_deg[w] == best_deg && rng() % ++ties == 0) {
          best = w;
        }
      }
      if (best >= 0) {
        append(best);
        stall = 0;
        continue;
      }
      if (++stall > stall_limit) break;
      int pick = -1;
      std::vector<int> options;
      for (int w : g.neighbors(end)) {
        int i = pos[w];
        if (i >= len - 2) continue;
        int ne = path[i + 1];
        bool good = len < n - 1 ? free_deg[ne] > 0 : g.has_edge(ne, t);
        if (good && rng() % 2 == 0) {
          pick = i;
          break;
        }
        options.push_back(i);
      }
      if (pick < 0) {
        if (options.empty()) break;
        pick = options[rng() % options.size()];
      }
      rotate_at(pick);
    }
  }
}

SearchResult find_path(const AdjacencyView& g, int s, int t, const SearchBudget& budget) {
  if (s == t) throw PreconditionViolated("path endpoints must differ");
  SearchResult res;
  res.verdict = SearchVerdict::None;
  if (g.size() == 2) {
    if (g.has_edge(s, t)) res = {SearchVerdict::Found, {s, t}, 1};
    return res;
  }
  SearchBudget rest = budget;
  std::uint64_t spent = 0;
  if (budget.heuristic && budget.algorithm != SearchBudget::Algorithm::DPOnly && g.size() + 1 > kExactRange) {
    SearchBudget h = budget;
    h.time_limit = budget.time_limit * 0.6;
    SearchResult p = rotation_extension_path(g, s, t, h);
    if (p.verdict == SearchVerdict::Found) return p;
    spent = p.nodes;
    rest.time_limit = budget.time_limit * 0.4;
    rest.node_limit = budget.node_limit / 2 + 1;
  }
  AdjacencyView aug = g;
  int z = aug.add_vertex({s, t});
  res = find_cycle(aug, rest);
  res.nodes += spent;
  if (res.verdict != SearchVerdict::Found) return res;
  auto& c = res.order;
  auto it = std::find(c.begin(), c.end(), z);
  std::rotate(c.begin(), it, c.end());
  c.erase(c.begin());
  if (c.front() != s) std::reverse(c.begin(), c.end());
  return res;
}

namespace {

HamiltonWitness to_witness(const AdjacencyView& g, const std::vector<int>& order,
                           HamiltonWitness::Kind kind) {
  if (!g.labelled()) throw PreconditionViolated("graph has no vertex labels");
  HamiltonWitness w{kind, {}};
  w.sequence.reserve(order.size());
  for (int id : order) w.sequence.push_back(g.label(id));
  return w;
}

}  // namespace

std::optional<HamiltonWitness> hamilton_cycle(const AdjacencyView& g,
                                              const SearchBudget& budget) {
  if (g.size() < 3) throw PreconditionViolated("Hamilton cycle needs n >= 3");
  SearchResult r = find_cycle(g, budget);
  if (r.verdict == SearchVerdict::Inconclusive)
    throw BudgetExhausted("search budget exhausted after " + std::to_string(r.nodes) + " nodes");
  if (r.verdict == SearchVerdict::None) return std::nullopt;
  return to_witness(g, r.order, HamiltonWitness::Kind::Cycle);
}

std::optional<HamiltonWitness> hamilton_path(const AdjacencyView& g, const Vertex& start,
                                             const Vertex& end, const SearchBudget& budget) {
  if (start == end) throw PreconditionViolated("path endpoints must differ");
  SearchResult r = find_path(g, g.id(start), g.id(end), budget);
  if (r.verdict == SearchVerdict::Inconclusive)
    throw BudgetExhausted("search budget exhausted after " + std::to_string(r.nodes) + " nodes");
  if (r.verdict == SearchVerdict::None) return std::nullopt;
  return to_witness(g, r.order, HamiltonWitness::Kind::Path);
}

OracleAnswer oracle_is_hamiltonian(const BicirculantSpec& spec, const SearchBudget& budget) {
  OracleAnswer ans;
  if (spec.m == 1 || !is_connected(spec)) {
    ans.kind = OracleAnswer::Kind::No;
    return ans;
  }
  AdjacencyView g = AdjacencyView::from_spec(spec);
  SearchResult r = find_cycle(g, budget);
  switch (r.verdict) {
    case SearchVerdict::Found:
      ans.kind = OracleAnswer::Kind::Yes;
      ans.witness = to_witness(g, r.order, HamiltonWitness::Kind::Cycle);
      break;
    case SearchVerdict::None:
      ans.kind = OracleAnswer::Kind::No;
      break;
    case SearchVerdict::Inconclusive:
      ans.kind = OracleAnswer::Kind::Inconclusive;
      break;
  }
  return ans;
}

// ---- Haar components -------------------------------------------------------

std::optional<std::vector<Vertex>> haar_cycle(int m, const std::vector<int>& S,
                                              const SearchBudget& budget) {
  if (m == 1) return std::nullopt;
  std::vector<int> order(S.begin(), S.end());
  // Prefer a spoke pair containing 0 so that the cycle starts u_0 v_0.
  std::stable_partition(order.begin(), order.end(), [](int c) { return c == 0; });
  for (int ci : order)
    for (int cj : S) {
      if (ci == cj || gcd(ci - cj, m) != 1) continue;
      std::int64_t d = mod(ci - cj, m);
      std::vector<Vertex> cyc;
      cyc.reserve(2 * m);
      for (std::int64_t k = 0; k < m; ++k) {
        cyc.push_back(outer(static_cast<int>(mod(k * d, m))));
        cyc.push_back(inner(static_cast<int>(mod(k * d + ci, m))));
      }
      return cyc;
    }
  BicirculantSpec h;
  h.m = m;
  h.S = S;
  std::sort(h.S.begin(), h.S.end());
  AdjacencyView g = AdjacencyView::from_spec(h);
  SearchResult r = find_cycle(g, budget);
  if (r.verdict != SearchVerdict::Found) {
    if (r.verdict == SearchVerdict::Inconclusive)
      throw BudgetExhausted("no Hamilton cycle found in H(" + std::to_string(m) + ";S) within budget");
    return std::nullopt;
  }
  auto& c = r.order;  // starts at id 0 = u_0
  if (c.size() > 2 && c[1] != m && c.back() == m) std::reverse(c.begin() + 1, c.end());
  std::vector<Vertex> cyc;
  for (int id : c) cyc.push_back(g.label(id));
  return cyc;
}

std::vector<Vertex> ComponentCycle::path() const {
  // v_s, u_t, ..., u_1, v_0, u_0
  return std::vector<Vertex>(cycle.rbegin(), cycle.rend());
}

ComponentCycle structured_component_path(int m, const std::vector<int>& S,
                                         const SearchBudget& budget) {
  const int G = spoke_gcd(m, S);
  std::vector<int> scaled;
  for (int c : S) scaled.push_back(c / G);
  std::optional<std::vector<Vertex>> cyc;
  try {
    cyc = haar_cycle(m / G, scaled, budget);
  } catch (const BudgetExhausted& e) {
    throw ComponentNotHamiltonian(e.what());
  }
  if (!cyc || cyc->size() < 4) throw ComponentNotHamiltonian("Haar component has no Hamilton cycle");
  ComponentCycle out;
  for (auto v : *cyc) out.cycle.push_back({v.layer, v.index * G});
  const auto& c = out.cycle;
  const int L = static_cast<int>(c.size());
  out.u0 = c[0];
  out.v0 = c[1];
  out.u1 = c[2];
  out.ut = c[L - 2];
  out.vs = c[L - 1];
  out.vk = c[3 % L];
  out.uz = c[4 % L];
  out.vh = c[5 % L];
  return out;
}

}  // namespace bicirc
