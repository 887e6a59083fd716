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

#include "bicirc/graph_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bicirc/errors.hpp"

namespace bicirc {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::int64_t inverse_mod(std::int64_t x, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = mod(x, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw NotCoprime("no inverse of " + std::to_string(x) + " mod " + std::to_string(n));
  return mod(old_s, n);
}

std::string to_string(const Vertex& v) {
  return (v.layer == Layer::Outer ? "u" : "v") + std::to_string(v.index);
}

Vertex parse_vertex(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'u' && text[0] != 'v'))
    throw ParseError("bad vertex '" + std::string(text) + "'", 0);
  int idx = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("bad vertex index", i);
    idx = idx * 10 + (text[i] - '0');
  }
  return {text[0] == 'u' ? Layer::Outer : Layer::Inner, idx};
}

std::string to_string(const ExceptionTag& tag) {
  if (tag.kind == ExceptionTag::Kind::K2) return "K2";
  return "AlspachGP(" + std::to_string(tag.m) + ")";
}

bool BicirculantSpec::has_half(const std::vector<int>& set) const {
  return m % 2 == 0 && std::binary_search(set.begin(), set.end(), m / 2);
}

int BicirculantSpec::outer_degree() const {
  return static_cast<int>(R.size() + S.size());
}
int BicirculantSpec::inner_degree() const {
  return static_cast<int>(T.size() + S.size());
}

namespace {

std::vector<int> reduce(const std::vector<std::int64_t>& xs, std::int64_t m) {
  std::set<int> out;
  for (auto x : xs) out.insert(static_cast<int>(mod(x, m)));
  return {out.begin(), out.end()};
}

void close_or_check(std::vector<int>& set, int m, bool close, const char* name) {
  std::set<int> s(set.begin(), set.end());
  for (int x : set) {
    int y = static_cast<int>(mod(-x, m));
    if (!s.count(y)) {
      if (!close)
        throw SpecError(SpecError::Kind::NonSymmetricSet,
                        std::string(name) + " contains " + std::to_string(x) +
                            " but not " + std::to_string(y));
      s.insert(y);
    }
  }
  set.assign(s.begin(), s.end());
}

std::vector<int> negate(const std::vector<int>& xs, int m) {
  std::vector<int> out;
  for (int x : xs) out.push_back(static_cast<int>(mod(-x, m)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> shift(const std::vector<int>& xs, int c, int m) {
  std::vector<int> out;
  for (int x : xs) out.push_back(static_cast<int>(mod(x - c, m)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BicirculantSpec validate_spec(const RawSpec& raw, bool close_symmetric) {
  if (raw.m < 1 || raw.m > (1 << 24))
    throw SpecError(SpecError::Kind::BadModulus, "m must be in [1, 2^24]");
  BicirculantSpec s;
  s.m = static_cast<int>(raw.m);
  s.R = reduce(raw.R, raw.m);
  s.S = reduce(raw.S, raw.m);
  s.T = reduce(raw.T, raw.m);
  if (std::binary_search(s.R.begin(), s.R.end(), 0) ||
      std::binary_search(s.T.begin(), s.T.end(), 0))
    throw SpecError(SpecError::Kind::ZeroInRT, "0 is not an admissible outer or inner type");
  if (s.S.empty()) throw SpecError(SpecError::Kind::EmptyS, "S must be nonempty");
  close_or_check(s.R, s.m, close_symmetric, "R");
  close_or_check(s.T, s.m, close_symmetric, "T");
  return s;
}

std::pair<BicirculantSpec, int> normalize(const BicirculantSpec& spec) {
  if (spec.S.empty()) throw SpecError(SpecError::Kind::EmptyS, "S must be nonempty");
  int c = spec.S.front();
  BicirculantSpec out = spec;
  out.S = shift(spec.S, c, spec.m);
  return {out, c};
}

std::vector<Edge> edges(const BicirculantSpec& spec) {
  const int m = spec.m;
  std::vector<Edge> out;
  out.reserve(edge_count(spec));
  auto cyclic = [&](const std::vector<int>& set, Layer layer, EdgeClass cls) {
    for (int a : set) {
      if (2 * a > m) continue;  // -a lists the same edges
      int limit = (2 * a == m) ? m / 2 : m;
      for (int i = 0; i < limit; ++i)
        out.push_back({{layer, i}, {layer, static_cast<int>((i + a) % m)}, {cls, a}});
    }
  };
  cyclic(spec.R, Layer::Outer, EdgeClass::Outer);
  cyclic(spec.T, Layer::Inner, EdgeClass::Inner);
  for (int c : spec.S)
    for (int i = 0; i < m; ++i)
      out.push_back({outer(i), inner(static_cast<int>((i + c) % m)), {EdgeClass::Spoke, c}});
  return out;
}

std::size_t edge_count(const BicirculantSpec& spec) {
  auto half = [&](const std::vector<int>& set) {
    std::size_t n = set.size(), h = spec.has_half(set) ? 1 : 0;
    return static_cast<std::size_t>(spec.m) * ((n - h) / 2) +
           h * static_cast<std::size_t>(spec.m / 2);
  };
  return half(spec.R) + half(spec.T) + static_cast<std::size_t>(spec.m) * spec.S.size();
}

int connectivity_gcd(const BicirculantSpec& spec) {
  std::int64_t g = spec.m;
  for (int x : spec.R) g = gcd(g, x);
  for (int x : spec.T) g = gcd(g, x);
  // Spoke differences: the gcd is shift invariant only through differences.
  for (int x : spec.S) g = gcd(g, x - spec.S.front());
  return static_cast<int>(g);
}

bool is_connected(const BicirculantSpec& spec) { return connectivity_gcd(spec) == 1; }

std::vector<std::pair<BicirculantSpec, ComponentEmbedding>> split_components(
    const BicirculantSpec& spec) {
  auto [norm, c] = normalize(spec);
  int d = connectivity_gcd(norm);
  BicirculantSpec q;
  q.m = norm.m / d;
  for (int x : norm.R) q.R.push_back(x / d);
  for (int x : norm.S) q.S.push_back(x / d);
  for (int x : norm.T) q.T.push_back(x / d);
  std::vector<std::pair<BicirculantSpec, ComponentEmbedding>> out;
  for (int i = 0; i < d; ++i) out.push_back({q, {d, i}});
  return out;
}

int spoke_gcd(int m, const std::vector<int>& S) {
  std::int64_t g = m;
  for (int x : S) g = gcd(g, x);
  return static_cast<int>(g);
}

std::optional<ExceptionTag> recognize_exception(const BicirculantSpec& spec) {
  if (spec.m == 1 && spec.R.empty() && spec.T.empty() && spec.S.size() == 1)
    return ExceptionTag{ExceptionTag::Kind::K2, 1};
  const int m = spec.m;
  if (m % 6 != 5 || spec.S.size() != 1 || spec.R.size() != 2 || spec.T.size() != 2)
    return std::nullopt;
  // B(m; ±x, c, ±y) with x a unit: multiplying by x^{-1} and shifting the
  // spoke gives B(m; ±1, 0, ±y/x). Both role assignments are tried.
  auto matches = [m](int x, int y) {
    if (gcd(x, m) != 1) return false;
    std::int64_t r = mod(static_cast<std::int64_t>(y) * inverse_mod(x, m), m);
    return r == 2 || r == m - 2;
  };
  int x = spec.R.front(), y = spec.T.front();
  if (matches(x, y) || matches(y, x)) return ExceptionTag{ExceptionTag::Kind::AlspachGP, m};
  return std::nullopt;
}

BicirculantSpec subgraph_ab(const BicirculantSpec& spec, int a, int b) {
  const int m = spec.m;
  a = static_cast<int>(mod(a, m));
  b = static_cast<int>(mod(b, m));
  if (!std::binary_search(spec.R.begin(), spec.R.end(), a))
    throw PreconditionViolated(std::to_string(a) + " is not an outer type");
  if (!std::binary_search(spec.T.begin(), spec.T.end(), b))
    throw PreconditionViolated(std::to_string(b) + " is not an inner type");
  if (2 * a == m || 2 * b == m) throw HalfTurnType("a or b equals m/2");
  BicirculantSpec out = spec;
  out.R = {a, static_cast<int>(mod(-a, m))};
  out.T = {b, static_cast<int>(mod(-b, m))};
  std::sort(out.R.begin(), out.R.end());
  std::sort(out.T.begin(), out.T.end());
  return out;
}

BicirculantSpec haar_restrict(const BicirculantSpec& spec, const std::vector<int>& spokes,
                              bool keep_rt) {
  if (spokes.empty()) throw SpecError(SpecError::Kind::EmptyS, "S' must be nonempty");
  BicirculantSpec out;
  out.m = spec.m;
  std::set<int> s;
  for (int c : spokes) s.insert(static_cast<int>(mod(c, spec.m)));
  out.S.assign(s.begin(), s.end());
  if (keep_rt) {
    out.R = spec.R;
    out.T = spec.T;
  }
  return out;
}

BicirculantSpec swap_roles(const BicirculantSpec& spec) {
  BicirculantSpec out;
  out.m = spec.m;
  out.R = spec.T;
  out.T = spec.R;
  out.S = negate(spec.S, spec.m);
  return out;
}

bool adjacent(const BicirculantSpec& spec, const Vertex& x, const Vertex& y) {
  const int m = spec.m;
  int d = static_cast<int>(mod(y.index - x.index, m));
  if (x.layer == y.layer) {
    const auto& set = x.layer == Layer::Outer ? spec.R : spec.T;
    return d != 0 && std::binary_search(set.begin(), set.end(), d);
  }
  if (x.layer == Layer::Inner) d = static_cast<int>(mod(-d, m));
  return std::binary_search(spec.S.begin(), spec.S.end(), d);
}

EdgeKind classify_edge(const BicirculantSpec& spec, const Vertex& x, const Vertex& y) {
  const int m = spec.m;
  int d = static_cast<int>(mod(y.index - x.index, m));
  if (x.layer == y.layer) {
    int rep = std::min(d, m - d);
    return {x.layer == Layer::Outer ? EdgeClass::Outer : EdgeClass::Inner, rep};
  }
  if (x.layer == Layer::Inner) d = static_cast<int>(mod(-d, m));
  return {EdgeClass::Spoke, d};
}

}  // namespace bicirc
