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

#include "bicirc/verify.hpp"

#include "bicirc/errors.hpp"

namespace bicirc {

std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::WrongLength: return "WrongLength";
    case Violation::Kind::RepeatedVertex: return "RepeatedVertex";
    case Violation::Kind::UnknownVertex: return "UnknownVertex";
    case Violation::Kind::NonAdjacentStep: return "NonAdjacentStep";
    case Violation::Kind::OpenCycle: return "OpenCycle";
    case Violation::Kind::WrongEndpoints: return "WrongEndpoints";
    case Violation::Kind::ForbiddenEdgeUsed: return "ForbiddenEdgeUsed";
  }
  return "?";
}

std::optional<Violation> check_witness(const BicirculantSpec& spec, const HamiltonWitness& w,
                                       const CheckOptions& opts) {
  const auto& seq = w.sequence;
  const std::size_t n = static_cast<std::size_t>(spec.order());
  if (seq.size() != n)
    return Violation{Violation::Kind::WrongLength, seq.size(),
                     "expected " + std::to_string(n) + " vertices, got " + std::to_string(seq.size())};
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex& v = seq[i];
    if (v.index < 0 || v.index >= spec.m)
      return Violation{Violation::Kind::UnknownVertex, i, to_string(v)};
    std::size_t id = (v.layer == Layer::Outer ? 0 : spec.m) + v.index;
    if (seen[id]) return Violation{Violation::Kind::RepeatedVertex, i, to_string(v)};
    seen[id] = 1;
  }
  auto step = [&](std::size_t i, const Vertex& a, const Vertex& b) -> std::optional<Violation> {
    if (!adjacent(spec, a, b))
      return Violation{Violation::Kind::NonAdjacentStep, i, to_string(a) + "-" + to_string(b)};
    if (opts.forbidden && opts.forbidden(a, b))
      return Violation{Violation::Kind::ForbiddenEdgeUsed, i, to_string(a) + "-" + to_string(b)};
    return std::nullopt;
  };
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (auto v = step(i, seq[i], seq[i + 1])) return v;
  if (w.is_cycle()) {
    if (n < 3 || !adjacent(spec, seq.back(), seq.front()))
      return Violation{Violation::Kind::OpenCycle, n - 1,
                       to_string(seq.back()) + "-" + to_string(seq.front())};
    if (opts.forbidden && opts.forbidden(seq.back(), seq.front()))
      return Violation{Violation::Kind::ForbiddenEdgeUsed, n - 1,
                       to_string(seq.back()) + "-" + to_string(seq.front())};
  } else if (opts.endpoints) {
    if (seq.front() != opts.endpoints->first || seq.back() != opts.endpoints->second)
      return Violation{Violation::Kind::WrongEndpoints, 0,
                       "got " + to_string(seq.front()) + ".." + to_string(seq.back())};
  }
  return std::nullopt;
}

std::optional<Violation> check_order(const AdjacencyView& g, const std::vector<int>& order,
                                     bool cycle) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  if (order.size() != n) return Violation{Violation::Kind::WrongLength, order.size(), ""};
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= static_cast<int>(n)) return Violation{Violation::Kind::UnknownVertex, i, ""};
    if (seen[v]) return Violation{Violation::Kind::RepeatedVertex, i, std::to_string(v)};
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!g.has_edge(order[i], order[i + 1]))
      return Violation{Violation::Kind::NonAdjacentStep, i, ""};
  if (cycle && (n < 3 || !g.has_edge(order.back(), order.front())))
    return Violation{Violation::Kind::OpenCycle, n - 1, ""};
  return std::nullopt;
}

EdgeProfile witness_edge_profile(const BicirculantSpec& spec, const HamiltonWitness& w) {
  if (auto v = check_witness(spec, w))
    throw InvalidWitness("witness invalid: " + to_string(v->kind) + " " + v->detail);
  EdgeProfile p;
  const auto& s = w.sequence;
  auto count = [&](const Vertex& a, const Vertex& b) {
    // Re-derived from the pair, not from any construction annotation.
    if (a.layer != b.layer)
      ++p.spokes;
    else if (a.layer == Layer::Outer)
      ++p.outer;
    else
      ++p.inner;
  };
  for (std::size_t i = 0; i + 1 < s.size(); ++i) count(s[i], s[i + 1]);
  if (w.is_cycle()) count(s.back(), s.front());
  return p;
}

Agreement cross_validate(const BicirculantSpec& spec, const SolveReport& report,
                         const SearchBudget& budget) {
  Agreement out;
  if (report.witness) {
    if (auto v = check_witness(spec, *report.witness)) {
      out.agree = false;
      out.detail = "witness rejected: " + to_string(v->kind) + " " + v->detail;
      return out;
    }
  } else if (report.verdict == Verdict::Hamiltonian) {
    out.agree = false;
    out.detail = "Hamiltonian verdict without witness";
    return out;
  }
  if (spec.order() > kExactRange) return out;
  out.oracle_consulted = true;
  OracleAnswer o = oracle_is_hamiltonian(spec, budget);
  const bool said_yes = report.verdict == Verdict::Hamiltonian;
  const bool said_no =
      report.verdict == Verdict::NonHamiltonianException || report.verdict == Verdict::Disconnected;
  if (o.kind == OracleAnswer::Kind::Yes && said_no) {
    out.agree = false;
    out.detail = "oracle found a cycle for a non-hamiltonian verdict";
  } else if (o.kind == OracleAnswer::Kind::No && said_yes) {
    out.agree = false;
    out.detail = "validated witness against a definitive oracle No";
  } else if (o.kind == OracleAnswer::Kind::No && !said_no) {
    out.agree = false;
    out.detail = "oracle says non-hamiltonian, dispatcher left it unresolved";
  } else if (o.kind == OracleAnswer::Kind::Yes && !said_yes) {
    out.agree = false;
    out.detail = "oracle found a cycle, dispatcher did not";
  }
  return out;
}

}  // namespace bicirc
