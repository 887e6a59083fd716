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
#include "grid_patterns.hpp"

namespace bicirc {

using detail::EdgeBag;

namespace {

Vertex shifted(const Vertex& v, int off, int m) {
  return {v.layer, static_cast<int>(mod(static_cast<std::int64_t>(v.index) + off, m))};
}

// Copy of component-frame vertex v in cell (i,j).
Vertex at(const GridRepresentation& rep, int i, int j, const Vertex& v) {
  return shifted(v, rep.offset(i, j), rep.m);
}

int label_count(const ComponentCycle& cyc) { return cyc.half_length() == 2 ? 4 : 6; }

// Position on the component cycle of abstract label a.
int label_pos(const ComponentCycle& cyc, int labels, int a) {
  if (labels == 6 && a == 5) return static_cast<int>(cyc.cycle.size()) - 1;
  return a;
}

void check_spec_pair(const BicirculantSpec& spec, const GridRepresentation& rep) {
  if (spec.m != rep.m) throw PreconditionViolated("representation built for another m");
  auto in = [](const std::vector<int>& s, int x) { return std::binary_search(s.begin(), s.end(), x); };
  if (!in(spec.R, rep.a) || !in(spec.T, rep.b))
    throw PreconditionViolated("a or b is not a type of the spec");
  if (spec.S.size() < 2) throw PreconditionViolated("|S| >= 2 required");
  if (std::find(spec.S.begin(), spec.S.end(), 0) == spec.S.end())
    throw PreconditionViolated("spec must be normalized");
  if (spoke_gcd(spec.m, spec.S) != rep.g_plus_1)
    throw PreconditionViolated("representation built for another S");
}

// Stitches cells rows [i0, i0+R) x cols [j0, j0+K) into one cycle.
void stitch_rectangle(EdgeBag& bag, const GridRepresentation& rep, const ComponentCycle& cyc,
                      int i0, int j0, int R, int K) {
  const int L = label_count(cyc);
  if (!detail::pattern_valid(L, R, K))
    throw ConstructionFailed("no stitching pattern for a " + std::to_string(R) + "x" +
                             std::to_string(K) + " grid");
  const auto& c = cyc.cycle;
  const int len = static_cast<int>(c.size());
  for (int ri = 0; ri < R; ++ri)
    for (int rj = 0; rj < K; ++rj) {
      const int i = i0 + ri, j = j0 + rj;
      const detail::CellRule& rule = detail::rule_for(L, R, K, ri, rj);
      for (int a = 0; a < L; ++a) {
        const Vertex& va = c[label_pos(cyc, L, a)];
        if (rule.internal >> a & 1) {
          if (L == 6 && a == 4) {
            for (int p = 4; p < len - 1; ++p) bag.add(at(rep, i, j, c[p]), at(rep, i, j, c[p + 1]));
          } else {
            bag.add(at(rep, i, j, va), at(rep, i, j, c[label_pos(cyc, L, (a + 1) % L)]));
          }
        }
        if (rule.right >> a & 1) bag.add(at(rep, i, j, va), at(rep, i, j + 1, va));
        if (rule.down >> a & 1) bag.add(at(rep, i, j, va), at(rep, i + 1, j, va));
      }
    }
}

HamiltonWitness rectangle_witness(const GridRepresentation& rep, const ComponentCycle& cyc,
                                  int i0, int j0, int R, int K) {
  EdgeBag bag(rep.m);
  stitch_rectangle(bag, rep, cyc, i0, j0, R, K);
  const std::size_t n = static_cast<std::size_t>(R) * K * cyc.cycle.size();
  return HamiltonWitness::cycle(bag.trace_cycle(at(rep, i0, j0, cyc.u0), n));
}

}  // namespace

HamiltonWitness uniform_grid_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                   const ComponentCycle& cycle) {
  if (rep.kind != GridRepresentation::Kind::Uniform)
    throw PreconditionViolated("uniform representation required");
  check_spec_pair(spec, rep);
  if (rep.mu < 1) throw PreconditionViolated("single-row grid; use uniform_row_cycle");
  return rectangle_witness(rep, cycle, 0, 0, rep.mu + 1, rep.lambda + 1);
}

HamiltonWitness uniform_grid_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                   const SearchBudget& budget) {
  check_spec_pair(spec, rep);
  return uniform_grid_cycle(spec, rep, structured_component_path(spec.m, spec.S, budget));
}

HamiltonWitness grid_subrectangle_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                        int i0, int j0, int cols, int rows,
                                        const ComponentCycle& cycle) {
  check_spec_pair(spec, rep);
  if (rows <= 0 || cols <= 0 || i0 < 0 || j0 < 0) throw OutOfGrid("empty selection");
  const int last_row = rep.kind == GridRepresentation::Kind::Uniform ? rep.mu : rep.mu - 1;
  if (i0 + rows > last_row || j0 + cols > rep.lambda) throw OutOfGrid("selection leaves the grid");
  return rectangle_witness(rep, cycle, i0, j0, rows + 1, cols + 1);
}

HamiltonWitness grid_subrectangle_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                        int i0, int j0, int cols, int rows,
                                        const SearchBudget& budget) {
  check_spec_pair(spec, rep);
  return grid_subrectangle_cycle(spec, rep, i0, j0, cols, rows,
                                 structured_component_path(spec.m, spec.S, budget));
}

HamiltonWitness nonuniform_extension(const BicirculantSpec& spec, const GridRepresentation& rep,
                                     const ComponentCycle& cyc) {
  if (rep.kind != GridRepresentation::Kind::NonUniform)
    throw PreconditionViolated("non-uniform representation required");
  check_spec_pair(spec, rep);
  const int mu = rep.mu, rho = rep.rho, lambda = rep.lambda;
  if (lambda < 1 || mu < 2 || rho < 0 || rho >= lambda)
    throw PreconditionViolated("representation parameters out of range");
  const int m = spec.m;
  const auto& c = cyc.cycle;
  const std::size_t len = c.size();
  const Vertex u0 = cyc.u0, v0 = cyc.v0, vs = cyc.vs;
  auto A = [&](int i, int j, const Vertex& v) { return at(rep, i, j, v); };
  // C minus u_0, read v_0 .. v_s.
  const std::vector<Vertex> minus_u0(c.begin() + 1, c.end());

  auto build = [&](bool beta_is_s) -> EdgeBag {
    EdgeBag bag(m);
    stitch_rectangle(bag, rep, cyc, 0, 0, mu, lambda + 1);
    const int r = mu - 1;  // last full row, sits on top of row mu
    if (rho == 0) {
      bag.remove(A(r, 0, u0), A(r, 0, vs));
      bag.add(A(r, 0, vs), A(mu, 0, vs));
      std::vector<Vertex> p;  // P = v_s .. u_0 in cell (mu,0)
      for (auto it = c.rbegin(); it != c.rend(); ++it) p.push_back(A(mu, 0, *it));
      bag.add_path(p);
      return bag;
    }
    for (int j = 1; j <= rho - 1; ++j) {
      bag.remove(A(r, j, vs), A(r, j, u0));
      bag.remove(A(r, j, u0), A(r, j, v0));
      bag.add(A(r, j, vs), A(mu, j, vs));
      bag.add(A(r, j, v0), A(mu, j, v0));
      std::vector<Vertex> p;
      for (const auto& v : minus_u0) p.push_back(A(mu, j, v));
      bag.add_path(p);
    }
    bag.remove(A(r, 0, u0), A(r, 0, vs));
    bag.add(A(r, 0, vs), A(mu, 0, vs));
    {
      std::vector<Vertex> p;
      for (auto it = c.rbegin(); it != c.rend(); ++it) p.push_back(A(mu, 0, *it));
      bag.add_path(p);
    }
    for (int j = 0; j < rho; ++j) bag.add(A(mu, j, u0), A(mu, j + 1, u0));
    // Cell (mu,rho): a path from u_0 to v_beta.
    std::vector<Vertex> p;
    if (beta_is_s) {
      for (std::size_t k = 0; k < len; ++k) p.push_back(A(mu, rho, c[k]));  // u_0 .. v_s
    } else {
      p.push_back(A(mu, rho, c[0]));
      for (std::size_t k = len - 1; k >= 1; --k) p.push_back(A(mu, rho, c[k]));  // u_0, v_s .. v_0
    }
    bag.add_path(p);
    const Vertex vb = beta_is_s ? vs : v0;
    bag.remove(A(r, rho, u0), A(r, rho, vb));
    bag.add(A(mu, rho, vb), A(r, rho, vb));
    for (int j = 0; j < rho; ++j) bag.add(A(r, j, u0), A(r, j + 1, u0));
    return bag;
  };

  const std::size_t n = static_cast<std::size_t>(2 * m);
  if (rho == 0) {
    EdgeBag bag = build(false);
    return HamiltonWitness::path(bag.trace_path(A(mu - 1, 0, u0), A(mu, 0, u0), n));
  }
  const bool first = rho % 2 == 1;  // beta = s for odd rho, 0 for even
  for (bool beta_is_s : {first, !first}) {
    EdgeBag bag = build(beta_is_s);
    if (bag.single_cycle(n)) return HamiltonWitness::cycle(bag.trace_cycle(outer(0), n));
  }
  throw ConstructionFailed("extension does not close into one cycle");
}

HamiltonWitness nonuniform_extension(const BicirculantSpec& spec, const GridRepresentation& rep,
                                     const SearchBudget& budget) {
  check_spec_pair(spec, rep);
  return nonuniform_extension(spec, rep, structured_component_path(spec.m, spec.S, budget));
}

HamiltonWitness origin_path(const GridRepresentation& rep, const HamiltonWitness& path) {
  const int off = static_cast<int>(mod(-static_cast<std::int64_t>(rep.mu - 1) * rep.b, rep.m));
  HamiltonWitness out = path;
  for (auto& v : out.sequence) v = shifted(v, off, rep.m);
  return out;
}

// ---- single-row rectangular grids ------------------------------------------

namespace {

// c: an alternating Hamilton cycle (ids, outer x -> x, inner x -> cm + x) of a
// column whose inner edges have type t. Removing c[i]c[i+1] with c[i+1] = u_0
// and c[j]c[j+1] with c[j] = v_{x+t}, c[i] = v_x, then adding v_x v_{x+t},
// leaves a Hamilton path u_0 .. c[j+1]. Empty if the result is not a path.
std::vector<int> path_through_inner_edge(const AdjacencyView& g, std::vector<int> c, int t) {
  const int n = static_cast<int>(c.size()), cm = n / 2;
  for (bool reversed : {false, true}) {
    if (reversed) std::reverse(c.begin(), c.end());
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[c[k]] = k;
    const int i = (pos[0] + n - 1) % n;
    if (c[i] < cm) continue;
    const int y = cm + static_cast<int>(mod(c[i] - cm + t, cm));
    const int j = pos[y];
    std::vector<int> out;
    out.reserve(n);
    for (int k = (i + 1) % n;; k = (k + 1) % n) {
      out.push_back(c[k]);
      if (k == j) break;
    }
    for (int k = i;; k = (k + n - 1) % n) {
      out.push_back(c[k]);
      if (k == (j + 1) % n) break;
    }
    if (static_cast<int>(out.size()) != n || out.back() >= cm) continue;
    bool ok = true;
    for (int k = 0; k + 1 < n && ok; ++k) ok = g.has_edge(out[k], out[k + 1]);
    if (ok) return out;
  }
  return {};
}

}  // namespace

HamiltonWitness uniform_row_cycle(const BicirculantSpec& spec, const GridRepresentation& rep,
                                  const SearchBudget& budget) {
  if (rep.kind != GridRepresentation::Kind::Uniform || rep.mu != 0)
    throw PreconditionViolated("single-row uniform representation required");
  check_spec_pair(spec, rep);
  const int m = spec.m, G = rep.g_plus_1, lambda = rep.lambda;
  // One column: the component of u_0 in B(m;0,S,b), scaled down by G.
  BicirculantSpec col;
  col.m = m / G;
  for (int c : spec.S) col.S.push_back(c / G);
  if (col.m > 1) {
    int bb = static_cast<int>(mod(rep.b / G, col.m));
    if (bb != 0) col.T = {bb, static_cast<int>(mod(-bb, col.m))};
  }
  std::sort(col.T.begin(), col.T.end());
  col.T.erase(std::unique(col.T.begin(), col.T.end()), col.T.end());
  const AdjacencyView base = AdjacencyView::from_spec(col);
  const int cm = col.m;
  if (cm < 2) throw ComponentNotHamiltonian("column too small");

  auto lift = [&](int id, int j) {
    Vertex v = id < cm ? outer(id * G) : inner((id - cm) * G);
    return shifted(v, static_cast<int>(mod(static_cast<std::int64_t>(j) * rep.a, m)), m);
  };
  auto search = [&](AdjacencyView g, int s, int t) -> std::vector<int> {
    SearchResult r = find_path(g, s, t, budget);
    if (r.verdict != SearchVerdict::Found)
      throw ComponentNotHamiltonian("no constrained path inside a column");
    return r.order;
  };
  std::vector<int> outers;
  for (int x = 1; x < cm; ++x) outers.push_back(x);

  // P0: u_0 .. u_q, a Hamilton path of the column ending at any outer vertex.
  // First from a cycle of the column's Haar part: drop the edge into u_0 and
  // one more, rejoin with an inner edge. Search otherwise.
  std::vector<int> p0;
  if (!col.T.empty()) {
    try {
      if (auto hc = haar_cycle(cm, col.S, budget)) {
        std::vector<int> c;
        for (const Vertex& v : *hc) c.push_back(v.layer == Layer::Outer ? v.index : cm + v.index);
        p0 = path_through_inner_edge(base, c, col.T.front());
      }
    } catch (const BudgetExhausted&) {
    }
  }
  if (p0.empty()) {
    AdjacencyView g0 = base;
    int hub = g0.add_vertex(outers);
    p0 = search(g0, 0, hub);
    p0.pop_back();
  }
  const int q = p0.back();

  EdgeBag bag(m);
  auto lay = [&](const std::vector<int>& ids, int j) {
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) bag.add(lift(ids[k], j), lift(ids[k + 1], j));
  };
  auto link = [&](int id, int j) { bag.add(lift(id, j), lift(id, j + 1)); };

  if (lambda == 1) {
    lay(p0, 0);
    lay(p0, 1);
    link(0, 0);
    link(q, 0);
  } else {
    // Two paths u_q .. u_r and u_s .. u_0 covering a column.
    AdjacencyView g1 = base;
    std::vector<int> mids;
    for (int x : outers)
      if (x != q) mids.push_back(x);
    int w = g1.add_vertex(mids);
    std::vector<int> cover = search(g1, q, 0);
    auto wp = std::find(cover.begin(), cover.end(), w);
    std::vector<int> qa(cover.begin(), wp), sb(wp + 1, cover.end());
    const int r = qa.back(), s = sb.front();
    std::vector<int> last;
    if (lambda % 2 == 0) last = search(base, r, s);  // u_r .. u_s
    lay(p0, 0);
    link(q, 0);
    link(0, 0);
    for (int j = 1; j < lambda; ++j) {
      lay(qa, j);
      lay(sb, j);
      // Odd columns pass through at q/r and 0/s; even ones at r/q and s/0.
      if (j % 2 == 1) {
        link(r, j);
        link(s, j);
      } else {
        link(q, j);
        link(0, j);
      }
    }
    lay(lambda % 2 == 1 ? p0 : last, lambda);
  }
  return HamiltonWitness::cycle(bag.trace_cycle(outer(0), static_cast<std::size_t>(2 * m)));
}

}  // namespace bicirc
