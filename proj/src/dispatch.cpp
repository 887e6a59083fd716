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

#include "bicirc/constructions.hpp"
#include "bicirc/errors.hpp"
#include "bicirc/verify.hpp"

namespace bicirc {

// ---- classification ---------------------------------------------------------

TypeResult classify_type(const BicirculantSpec& spec, int min_spokes) {
  TypeResult out;
  const int m = spec.m;
  if (static_cast<int>(spec.S.size()) < min_spokes || !is_connected(spec)) return out;
  const int G = spoke_gcd(m, spec.S);
  if (G <= 1 || spec.R.empty() || spec.T.empty()) return out;
  if (spec.has_half(spec.R) || spec.has_half(spec.T)) return out;
  for (int x : spec.R)
    if (gcd(x, G) != 1) return out;
  for (int x : spec.T)
    if (gcd(x, G) != 1) return out;
  for (int a : spec.R)
    for (int b : spec.T) {
      if (mod(b - a, G) == 0 || mod(b + a, G) == 0) return {TypeResult::Kind::TypeI, a, b, true};
      GridRepresentation rep = nonuniform_params(m, spec.S, a, b);
      if (rep.rho > 0 && rep.mu > 1) return {TypeResult::Kind::TypeI, a, b, false};
    }
  return {TypeResult::Kind::TypeII, spec.R.front(), spec.T.front(), false};
}

std::optional<std::vector<int>> spanning_three_spoke_subset(const BicirculantSpec& spec) {
  const auto& S = spec.S;
  const int n = static_cast<int>(S.size());
  if (n < 4) return std::nullopt;
  std::int64_t base = spec.m;
  for (int x : spec.R) base = gcd(base, x);
  for (int x : spec.T) base = gcd(base, x);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (gcd(gcd(base, S[j] - S[i]), S[k] - S[i]) == 1) return std::vector<int>{S[i], S[j], S[k]};
  return std::nullopt;
}

// ---- the ladder ---------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
  DispatchOptions opts;
  Clock::time_point deadline;

  double remaining() const { return std::chrono::duration<double>(deadline - Clock::now()).count(); }
  SearchBudget budget() const {
    SearchBudget b = opts.budget;
    b.time_limit = std::max(0.05, std::min(b.time_limit, remaining()));
    return b;
  }
};

struct Outcome {
  Verdict verdict = Verdict::NoStrategyApplies;
  std::optional<HamiltonWitness> witness;  // labels of the solved spec
  std::optional<ExceptionTag> exception;
  std::vector<SolveReport> components;
  std::vector<std::string> notes;
};

Outcome solve(const BicirculantSpec& s, Context& ctx, int depth, std::vector<StrategyNode>& tree);

StrategyNode& open(std::vector<StrategyNode>& tree, StrategyTag tag, const BicirculantSpec& s) {
  tree.push_back({tag, s, false, {}, {}});
  return tree.back();
}

HamiltonWitness swap_layers(HamiltonWitness w) {
  for (auto& v : w.sequence) v.layer = v.layer == Layer::Outer ? Layer::Inner : Layer::Outer;
  return w;
}

HamiltonWitness unshift(HamiltonWitness w, int shift, int m) {
  for (auto& v : w.sequence)
    if (v.layer == Layer::Inner) v.index = static_cast<int>(mod(v.index + shift, m));
  return w;
}

// Accepts a witness only if it validates against `s`.
bool accept(const BicirculantSpec& s, const HamiltonWitness& w, StrategyNode& node, Outcome& out) {
  if (auto v = check_witness(s, w)) {
    node.note = "witness rejected: " + to_string(v->kind) + " " + v->detail;
    return false;
  }
  node.succeeded = true;
  out.verdict = Verdict::Hamiltonian;
  out.witness = w;
  return true;
}

// Solves a connected sub-spec (same vertex set, subset of edges) after
// normalizing it; the witness comes back in the labels of `sub`.
std::optional<HamiltonWitness> solve_spanning(const BicirculantSpec& sub, Context& ctx, int depth,
                                              StrategyNode& node) {
  auto [norm, shift] = normalize(sub);
  Outcome o = solve(norm, ctx, depth + 1, node.children);
  if (o.verdict != Verdict::Hamiltonian || !o.witness) return std::nullopt;
  return unshift(*o.witness, shift, sub.m);
}

BicirculantSpec rose(int m, int a, int b, const std::vector<int>& S) {
  BicirculantSpec out;
  out.m = m;
  out.R = {static_cast<int>(mod(a, m)), static_cast<int>(mod(-a, m))};
  out.T = {static_cast<int>(mod(b, m)), static_cast<int>(mod(-b, m))};
  out.S = S;
  for (auto* v : {&out.R, &out.T}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  std::sort(out.S.begin(), out.S.end());
  return out;
}

// ---- individual rungs ------------------------------------------------------------

bool rung_uniform(const BicirculantSpec& s, Context& ctx, std::vector<StrategyNode>& tree, Outcome& out) {
  const int m = s.m, G = spoke_gcd(m, s.S);
  struct Cand {
    bool swapped;
    int a, b, mu;
  };
  std::vector<Cand> cands;
  for (bool swapped : {false, true}) {
    const BicirculantSpec sp = swapped ? swap_roles(s) : s;
    for (int a : sp.R)
      for (int b : sp.T) {
        if (2 * a == m || 2 * b == m) continue;
        const int d = static_cast<int>(gcd(G, b));
        if (d <= 1 || gcd(d, a) != 1) continue;
        cands.push_back({swapped, a, b, G / d - 1});
      }
  }
  if (cands.empty()) return false;
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    return (x.mu > 0) > (y.mu > 0);
  });
  int tried = 0;
  for (const Cand& c : cands) {
    if (tried++ == 3 || ctx.remaining() <= 0) break;
    const BicirculantSpec sp = c.swapped ? swap_roles(s) : s;
    StrategyNode& node = open(tree, StrategyTag::UniformGrid, sp);
    node.note = "a=" + std::to_string(c.a) + " b=" + std::to_string(c.b) + (c.swapped ? " (roles swapped)" : "");
    try {
      const BicirculantSpec sub = subgraph_ab(sp, c.a, c.b);
      GridRepresentation rep = uniform_params(m, sp.S, c.a, c.b);
      node.note += " lambda=" + std::to_string(rep.lambda) + " mu=" + std::to_string(rep.mu);
      HamiltonWitness w = rep.mu >= 1 ? uniform_grid_cycle(sub, rep, ctx.budget())
                                      : uniform_row_cycle(sub, rep, ctx.budget());
      if (c.swapped) w = swap_layers(std::move(w));
      if (accept(s, w, node, out)) return true;
    } catch (const Error& e) {
      node.note += std::string(": ") + e.what();
    }
  }
  return false;
}

// Hamilton path u_0 -> u_b of a component, b possibly re-signed.
std::optional<std::pair<HamiltonWitness, int>> component_path(const BicirculantSpec& K, int a, int b,
                                                             Context& ctx, StrategyNode& node) {
  try {
    GridRepresentation rep = nonuniform_params(K.m, K.S, a, b);
    if (rep.rho == 0 && rep.mu > 1) {
      HamiltonWitness raw = nonuniform_extension(K, rep, ctx.budget());
      HamiltonWitness p = origin_path(rep, raw);
      node.note += " component (lambda,mu,rho)=(" + std::to_string(rep.lambda) + "," +
                   std::to_string(rep.mu) + "," + std::to_string(rep.rho) + ")";
      CheckOptions co;
      co.endpoints = std::make_pair(outer(0), outer(rep.b));
      if (!check_witness(K, p, co)) return std::make_pair(p, rep.b);
      node.note += " extension path rejected;";
    }
  } catch (const Error& e) {
    node.note += std::string(" extension: ") + e.what() + ";";
  }
  StrategyNode sub{StrategyTag::ImportedBaseSearch, K, false, "u_0 -> u_b path", {}};
  try {
    auto p = hamilton_path(AdjacencyView::from_spec(K), outer(0), outer(static_cast<int>(mod(b, K.m))),
                           ctx.budget());
    sub.succeeded = p.has_value();
    node.children.push_back(sub);
    if (p) return std::make_pair(*p, static_cast<int>(mod(b, K.m)));
  } catch (const Error& e) {
    sub.note += std::string(": ") + e.what();
    node.children.push_back(sub);
  }
  return std::nullopt;
}

bool rung_type_two(const BicirculantSpec& s, int a, int b, Context& ctx, int depth,
                   std::vector<StrategyNode>& tree, Outcome& out) {
  const int m = s.m, G = spoke_gcd(m, s.S);
  // Keep a spoke not divisible by the 2-part of m, so m/gcd(m,S') stays even.
  std::optional<int> keep;
  if (m % 2 == 0 && (m / G) % 2 == 0) {
    int two = 1;
    while (m % (two * 2) == 0) two *= 2;
    for (int c : s.S)
      if (c % two != 0) {
        keep = c;
        break;
      }
  }
  const GridRepresentation top = nonuniform_params(m, s.S, a, b);
  for (int c : s.S) {
    if (c == 0 || (keep && c == *keep) || ctx.remaining() <= 0) continue;
    std::vector<int> rest;
    for (int x : s.S)
      if (x != c) rest.push_back(x);
    const BicirculantSpec sub = rose(m, a, b, rest);
    StrategyNode& node = open(tree, StrategyTag::TypeIIRecursion, sub);
    node.note = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
    try {
      const int delta = connectivity_gcd(sub);
      if (delta == 1) {
        node.note += " spanning subgraph connected";
        auto w = solve_spanning(sub, ctx, depth, node);
        if (w && accept(s, *w, node, out)) return true;
        continue;
      }
      const BicirculantSpec K = split_components(sub).front().first;
      node.note += " components=" + std::to_string(delta);
      if (K.m > 5 && spoke_gcd(K.m, K.S) > 1) {
        GridRepresentation inherited = nonuniform_params(K.m, K.S, a / delta, b / delta);
        const bool same = inherited.lambda == top.lambda && inherited.mu == top.mu && inherited.rho == top.rho;
        node.note += same ? " parameters inherited" : " parameters NOT inherited";
      }
      StrategyNode& cyc_node = open(node.children, StrategyTag::TypeIIRecursion, K);
      cyc_node.note = "component cycle";
      Outcome kc = solve(K, ctx, depth + 1, cyc_node.children);
      if (kc.verdict != Verdict::Hamiltonian || !kc.witness) continue;
      cyc_node.succeeded = true;
      auto path = component_path(K, a / delta, b / delta, ctx, node);
      if (!path) continue;
      const int b_eff = static_cast<int>(mod(static_cast<std::int64_t>(path->second) * delta, m));
      HookedComponentData data{K, *kc.witness, path->first};
      StrategyNode& hook = open(node.children, StrategyTag::TwoHooked, s);
      try {
        HamiltonWitness w = two_hooked(s, a, b_eff, c, data);
        if (accept(s, w, hook, out)) {
          node.succeeded = true;
          return true;
        }
      } catch (const Error& e) {
        hook.note = e.what();
      }
    } catch (const Error& e) {
      node.note += std::string(": ") + e.what();
    }
  }
  return false;
}

bool rung_search(const BicirculantSpec& s, Context& ctx, std::vector<StrategyNode>& tree, Outcome& out,
                 const std::string& why, bool* exhausted_none = nullptr) {
  StrategyNode& node = open(tree, StrategyTag::ImportedBaseSearch, s);
  node.note = why;
  if (s.order() < 3) return false;
  SearchResult r = find_cycle(AdjacencyView::from_spec(s), ctx.budget());
  if (r.verdict == SearchVerdict::Found) {
    AdjacencyView g = AdjacencyView::from_spec(s);
    std::vector<Vertex> seq;
    for (int id : r.order) seq.push_back(g.label(id));
    return accept(s, HamiltonWitness::cycle(std::move(seq)), node, out);
  }
  node.note += r.verdict == SearchVerdict::None ? "; exhaustive search: no Hamilton cycle" : "; budget exhausted";
  if (exhausted_none) *exhausted_none = r.verdict == SearchVerdict::None;
  if (r.verdict == SearchVerdict::Inconclusive) out.verdict = Verdict::Inconclusive;
  return false;
}

Outcome solve(const BicirculantSpec& s, Context& ctx, int depth, std::vector<StrategyNode>& tree) {
  Outcome out;
  const int m = s.m;
  if (depth > ctx.opts.max_depth) {
    out.verdict = Verdict::Inconclusive;
    out.notes.push_back("recursion depth limit reached");
    return out;
  }

  // (1) disconnected: one report per component.
  if (!is_connected(s)) {
    StrategyNode& node = open(tree, StrategyTag::ComponentSplit, s);
    auto parts = split_components(s);
    node.note = std::to_string(parts.size()) + " isomorphic components";
    DispatchOptions sub = ctx.opts;
    sub.total_seconds = std::max(0.05, ctx.remaining());
    SolveReport r = dispatch_solve(parts.front().first, sub);
    for (std::size_t i = 0; i < parts.size(); ++i) out.components.push_back(r);
    node.succeeded = r.resolved();
    out.verdict = Verdict::Disconnected;
    return out;
  }

  // (2) small m.
  if (m <= 5) {
    StrategyNode& node = open(tree, StrategyTag::SmallM, s);
    OracleAnswer a = oracle_is_hamiltonian(s, ctx.budget());
    if (a.kind == OracleAnswer::Kind::Yes && accept(s, *a.witness, node, out)) return out;
    if (a.kind == OracleAnswer::Kind::No) {
      if (auto ex = recognize_exception(s)) {
        StrategyNode& e = open(tree, StrategyTag::ExceptionFamily, s);
        e.succeeded = true;
        e.note = to_string(*ex);
        out.verdict = Verdict::NonHamiltonianException;
        out.exception = ex;
        return out;
      }
      node.note = "no Hamilton cycle and not a listed exception";
      out.notes.push_back("non-hamiltonian spec outside the exception families (not regular?)");
      return out;
    }
    out.verdict = Verdict::Inconclusive;
    return out;
  }

  // (3) exception families.
  if (auto ex = recognize_exception(s)) {
    StrategyNode& node = open(tree, StrategyTag::ExceptionFamily, s);
    node.note = to_string(*ex);
    if (m <= 17) {
      SearchBudget b = ctx.budget();
      b.heuristic = false;
      OracleAnswer a = oracle_is_hamiltonian(s, b);
      if (a.kind == OracleAnswer::Kind::Yes) {
        node.note += "; oracle found a Hamilton cycle";
        out.notes.push_back("exception family member is hamiltonian");
        accept(s, *a.witness, node, out);
        return out;
      }
      node.note += a.kind == OracleAnswer::Kind::No ? "; oracle confirms" : "; oracle inconclusive";
    }
    node.succeeded = true;
    out.verdict = Verdict::NonHamiltonianException;
    out.exception = ex;
    return out;
  }

  const int G = spoke_gcd(m, s.S);
  // (4) connected Haar subgraph.
  if (G == 1) {
    StrategyNode& node = open(tree, StrategyTag::HaarConnected, s);
    try {
      if (auto c = haar_cycle(m, s.S, ctx.budget())) {
        if (accept(s, HamiltonWitness::cycle(*c), node, out)) return out;
      } else {
        node.note = "H(m;S) has no Hamilton cycle";
      }
    } catch (const Error& e) {
      node.note = e.what();
    }
  }

  // (5) m/2 in both R and T.
  if (m % 2 == 0 && s.has_half(s.R) && s.has_half(s.T)) {
    StrategyNode& node = open(tree, StrategyTag::HalfTurn, s);
    node.note = "imported result; certified by search";
    Outcome tmp;
    if (rung_search(s, ctx, node.children, tmp, "half-turn types")) {
      node.succeeded = true;
      out.verdict = Verdict::Hamiltonian;
      out.witness = tmp.witness;
      return out;
    }
  }

  // (6) a type sharing a factor with gcd(m,S).
  if (G > 1 && s.S.size() >= 2) {
    bool any = false;
    for (const auto* set : {&s.R, &s.T})
      for (int x : *set)
        if (gcd(x, G) != 1) any = true;
    if (any && rung_uniform(s, ctx, tree, out)) return out;
  }

  // (7) type I / type II.
  if (s.S.size() >= 3 && G > 1) {
    const int min_spokes = s.S.size() == 3 ? 3 : 4;
    TypeResult t = classify_type(s, min_spokes);
    if (t.kind == TypeResult::Kind::TypeI) {
      const BicirculantSpec sub = rose(m, t.a, t.b, s.S);
      if (t.congruent) {
        StrategyNode& node = open(tree, congruent_route(sub, t.a, t.b), sub);
        node.note = "a=" + std::to_string(t.a) + " b=" + std::to_string(t.b);
        try {
          if (accept(s, congruent_case(sub, t.a, t.b, ctx.budget()), node, out)) return out;
        } catch (const Error& e) {
          node.note += std::string(": ") + e.what();
        }
      } else {
        StrategyNode& node = open(tree, StrategyTag::NonUniformExtension, sub);
        try {
          GridRepresentation rep = nonuniform_params(m, s.S, t.a, t.b);
          node.note = "a=" + std::to_string(t.a) + " b=" + std::to_string(t.b) + " (lambda,mu,rho)=(" +
                      std::to_string(rep.lambda) + "," + std::to_string(rep.mu) + "," +
                      std::to_string(rep.rho) + ")";
          if (accept(s, nonuniform_extension(sub, rep, ctx.budget()), node, out)) return out;
        } catch (const Error& e) {
          node.note += std::string(": ") + e.what();
        }
      }
    } else if (t.kind == TypeResult::Kind::TypeII) {
      if (rung_type_two(s, t.a, t.b, ctx, depth, tree, out)) return out;
    }
  }

  // Spoke sets of size at most two: imported base case, certified by search.
  if (s.S.size() <= 2) {
    if (rung_search(s, ctx, tree, out, "at most two spoke types")) return out;
    if (out.verdict == Verdict::Inconclusive) return out;
  }

  // (8) spanning three-spoke subgraph.
  if (s.S.size() >= 4) {
    if (auto tri = spanning_three_spoke_subset(s)) {
      BicirculantSpec sub = haar_restrict(s, *tri, true);
      StrategyNode& node = open(tree, StrategyTag::ThreeSpokeReduction, sub);
      node.note = "spokes " + std::to_string((*tri)[0]) + "," + std::to_string((*tri)[1]) + "," +
                  std::to_string((*tri)[2]);
      if (auto w = solve_spanning(sub, ctx, depth, node))
        if (accept(s, *w, node, out)) return out;
    }
  }

  // (9) nothing applies.
  out.verdict = Verdict::NoStrategyApplies;
  if (ctx.opts.base_search_fallback && s.S.size() > 2 && ctx.remaining() > 0) {
    if (rung_search(s, ctx, tree, out, "fallback after the ladder")) return out;
    if (out.verdict == Verdict::Inconclusive) out.verdict = Verdict::NoStrategyApplies;
  }
  return out;
}

}  // namespace

SolveReport dispatch_solve(const BicirculantSpec& spec, const DispatchOptions& opts) {
  const auto t0 = Clock::now();
  SolveReport rep;
  rep.spec = spec;
  auto [norm, shift] = normalize(spec);
  rep.normalized = norm;
  rep.shift = shift;
  // Keep a margin for the final validation.
  const double work = opts.total_seconds * 0.95;
  Context ctx{opts, t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(work))};
  Outcome o = solve(norm, ctx, 0, rep.strategy_tree);
  rep.verdict = o.verdict;
  rep.exception = o.exception;
  rep.components = std::move(o.components);
  rep.notes = std::move(o.notes);
  if (o.witness) {
    HamiltonWitness w = unshift(*o.witness, shift, spec.m);
    if (auto v = check_witness(spec, w)) {
      rep.verdict = Verdict::Inconclusive;
      rep.notes.push_back("witness failed final validation: " + v->detail);
    } else {
      rep.witness = std::move(w);
    }
  }
  if (rep.verdict == Verdict::Hamiltonian && !rep.witness) rep.verdict = Verdict::Inconclusive;
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace bicirc
