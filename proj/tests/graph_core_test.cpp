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

#include <gtest/gtest.h>

#include <random>

#include "bicirc/errors.hpp"
#include "test_oracle.hpp"

namespace bicirc {
namespace {

using testing::brute_graph;
using testing::make;
using testing::md;
using testing::vid;

std::set<std::pair<int, int>> listed(const BicirculantSpec& s) {
  std::set<std::pair<int, int>> out;
  for (const Edge& e : edges(s)) out.insert(std::minmax(vid(s.m, e.a), vid(s.m, e.b)));
  return out;
}

BicirculantSpec random_spec(std::mt19937& rng, int m_max) {
  std::uniform_int_distribution<int> M(3, m_max);
  const int m = M(rng);
  std::uniform_int_distribution<int> X(0, m - 1), K(0, 3);
  std::vector<int> R, S, T;
  for (int k = K(rng); k > 0; --k)
    if (int x = X(rng)) R.push_back(x);
  for (int k = K(rng) + 1; k > 0; --k) S.push_back(X(rng));
  for (int k = K(rng); k > 0; --k)
    if (int x = X(rng)) T.push_back(x);
  return make(m, R, S, T);
}

TEST(ValidateSpec, PetersenIsAccepted) {
  BicirculantSpec s = validate_spec({5, {1, 4}, {0}, {2, 3}});
  EXPECT_EQ(s.m, 5);
  EXPECT_EQ(s.R, (std::vector<int>{1, 4}));
  EXPECT_EQ(s.T, (std::vector<int>{2, 3}));
  EXPECT_EQ(s.outer_degree(), 3);
  EXPECT_EQ(s.inner_degree(), 3);
}

TEST(ValidateSpec, ClosesUnderNegation) {
  BicirculantSpec s = validate_spec({6, {2}, {0}, {2}});
  EXPECT_EQ(s.R, (std::vector<int>{2, 4}));
  EXPECT_EQ(s.T, (std::vector<int>{2, 4}));
}

TEST(ValidateSpec, ReducesAndDeduplicates) {
  BicirculantSpec s = validate_spec({7, {8, -1, 1}, {14, 0, 3}, {}});
  EXPECT_EQ(s.R, (std::vector<int>{1, 6}));
  EXPECT_EQ(s.S, (std::vector<int>{0, 3}));
}

TEST(ValidateSpec, Rejections) {
  EXPECT_THROW(validate_spec({4, {0}, {0}, {}}), SpecError);
  EXPECT_THROW(validate_spec({4, {}, {0}, {4}}), SpecError);
  EXPECT_THROW(validate_spec({4, {1}, {}, {}}), SpecError);
  EXPECT_THROW(validate_spec({0, {}, {0}, {}}), SpecError);
  try {
    validate_spec({6, {1}, {0}, {}}, false);
    FAIL() << "expected NonSymmetricSet";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.kind, SpecError::Kind::NonSymmetricSet);
  }
}

TEST(SpecText, RoundTrip) {
  for (const char* t : {"B(5;1,4;0;2,3)", "B(1;;0;)", "B(24;1,23;0,12;4,20)", "B(8;4;0,2;4)"}) {
    BicirculantSpec s = parse_spec(t);
    EXPECT_EQ(format_spec(s), t);
    EXPECT_EQ(parse_spec(format_spec(s)), s);
  }
}

TEST(SpecText, ParseErrorsCarryPosition) {
  for (const char* t : {"", "B(5;1,4;0;2,3", "C(5;;0;)", "B(5;x;0;)", "B(5;1;0;1) junk"}) {
    EXPECT_THROW(parse_spec(t), ParseError) << t;
  }
  try {
    parse_spec("B(5;1,4;0;2,3");
  } catch (const ParseError& e) {
    EXPECT_GT(e.position, 0u);
  }
}

TEST(Vertex, TextRoundTrip) {
  EXPECT_EQ(to_string(outer(3)), "u3");
  EXPECT_EQ(to_string(inner(12)), "v12");
  EXPECT_EQ(parse_vertex("v12"), inner(12));
  EXPECT_EQ(parse_vertex("u0"), outer(0));
  EXPECT_THROW(parse_vertex("w1"), ParseError);
}

TEST(Normalize, SubtractsSmallestSpoke) {
  auto [s, c] = normalize(make(7, {1}, {2, 5}, {3}));
  EXPECT_EQ(s.S, (std::vector<int>{0, 3}));
  EXPECT_EQ(c, 2);
  auto [t, d] = normalize(make(7, {1}, {0, 3}, {3}));
  EXPECT_EQ(t.S, (std::vector<int>{0, 3}));
  EXPECT_EQ(d, 0);
}

// u_i -> u_i, v_i -> v_{i-c} maps the input's edges onto the output's.
TEST(Normalize, IsAnIsomorphism) {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    BicirculantSpec in = random_spec(rng, 30);
    auto [out, c] = normalize(in);
    ASSERT_TRUE(std::binary_search(out.S.begin(), out.S.end(), 0));
    const int m = in.m;
    auto map = [&](int x) { return x < m ? x : m + md(x - m - c, m); };
    std::set<std::pair<int, int>> image;
    for (auto [x, y] : brute_graph(in).edges) image.insert(std::minmax(map(x), map(y)));
    EXPECT_EQ(image, brute_graph(out).edges) << format_spec(in);
  }
}

TEST(Edges, SmallExamples) {
  BicirculantSpec hex = make(3, {}, {0, 1}, {});
  EXPECT_EQ(edges(hex).size(), 6u);
  for (int d : {hex.outer_degree(), hex.inner_degree()}) EXPECT_EQ(d, 2);

  BicirculantSpec pet = make(5, {1}, {0}, {2});
  EXPECT_EQ(edge_count(pet), 15u);

  BicirculantSpec anti = make(4, {2}, {0}, {2});
  std::set<std::pair<int, int>> outer_edges;
  for (const Edge& e : edges(anti))
    if (e.kind.cls == EdgeClass::Outer) outer_edges.insert(std::minmax(e.a.index, e.b.index));
  EXPECT_EQ(outer_edges, (std::set<std::pair<int, int>>{{0, 2}, {1, 3}}));
}

TEST(Edges, MatchDefinitionExactlyOnce) {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 300; ++rep) {
    BicirculantSpec s = random_spec(rng, 25);
    auto list = edges(s);
    EXPECT_EQ(list.size(), listed(s).size()) << "duplicate edge in " << format_spec(s);
    EXPECT_EQ(listed(s), brute_graph(s).edges) << format_spec(s);
    EXPECT_EQ(edge_count(s), list.size());
    for (const Edge& e : list) {
      EXPECT_TRUE(adjacent(s, e.a, e.b));
      EXPECT_EQ(classify_edge(s, e.a, e.b), e.kind);
    }
  }
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(make(6, {2}, {0, 3}, {2})));
  EXPECT_FALSE(is_connected(make(6, {2}, {0, 2}, {2})));
}

TEST(Connectivity, AgreesWithSearch) {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 400; ++rep) {
    BicirculantSpec s = random_spec(rng, 30);
    auto [n, c] = normalize(s);
    const int parts = testing::component_count(brute_graph(n));
    EXPECT_EQ(is_connected(n), parts == 1) << format_spec(n);
    EXPECT_EQ(connectivity_gcd(n), parts) << format_spec(n);
  }
}

TEST(SplitComponents, Examples) {
  auto parts = split_components(make(6, {2}, {0, 2}, {2}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, make(3, {1}, {0, 1}, {1}));

  auto three = split_components(make(12, {3}, {0, 6}, {3}));
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0].first, make(4, {1}, {0, 2}, {1}));
}

// Each embedded copy is a union of components with the same edges.
TEST(SplitComponents, EmbeddingPreservesAdjacency) {
  std::mt19937 rng(9);
  int checked = 0;
  while (checked < 100) {
    BicirculantSpec s = normalize(random_spec(rng, 30)).first;
    if (is_connected(s)) continue;
    ++checked;
    auto parts = split_components(s);
    ASSERT_EQ(static_cast<int>(parts.size()), connectivity_gcd(s));
    auto big = brute_graph(s);
    auto comp = testing::bfs_components(big);
    std::set<int> seen;
    std::size_t total = 0;
    for (const auto& [sub, emb] : parts) {
      auto small = brute_graph(sub);
      total += small.edges.size();
      int cid = comp[vid(s.m, emb(outer(0)))];
      EXPECT_TRUE(seen.insert(cid).second);
      for (auto [x, y] : small.edges) {
        auto lab = [&](int z) { return z < sub.m ? outer(z) : inner(z - sub.m); };
        int X = vid(s.m, emb(lab(x))), Y = vid(s.m, emb(lab(y)));
        EXPECT_TRUE(big.adj[X].count(Y)) << format_spec(s);
        EXPECT_EQ(comp[X], cid);
      }
    }
    EXPECT_EQ(total, big.edges.size());
  }
}

TEST(Exceptions, Recognition) {
  EXPECT_EQ(recognize_exception(make(5, {1}, {0}, {2})), (ExceptionTag{ExceptionTag::Kind::AlspachGP, 5}));
  EXPECT_EQ(recognize_exception(make(11, {2}, {0}, {1})), (ExceptionTag{ExceptionTag::Kind::AlspachGP, 11}));
  EXPECT_EQ(recognize_exception(make(1, {}, {0}, {})), (ExceptionTag{ExceptionTag::Kind::K2, 1}));
  EXPECT_FALSE(recognize_exception(make(7, {1}, {0}, {2})));
  EXPECT_FALSE(recognize_exception(make(9, {1}, {0}, {2})));
  EXPECT_FALSE(recognize_exception(make(10, {1}, {0}, {2})));
  // A shifted presentation of G(17,2).
  EXPECT_TRUE(recognize_exception(make(17, {1}, {3}, {2})));
}

TEST(Subgraphs, AreSpanningEdgeSubsets) {
  BicirculantSpec s = make(12, {1, 5}, {0, 3, 4}, {2, 5});
  for (const BicirculantSpec& sub :
       {subgraph_ab(s, 1, 5), haar_restrict(s, {0, 4}), haar_restrict(s, {0, 3}, true)}) {
    EXPECT_EQ(sub.m, s.m);
    for (auto e : brute_graph(sub).edges) EXPECT_TRUE(brute_graph(s).edges.count(e));
  }
  EXPECT_EQ(subgraph_ab(s, 1, 5), make(12, {1}, {0, 3, 4}, {5}));
  EXPECT_TRUE(haar_restrict(s, {0, 4}).R.empty());
  EXPECT_EQ(haar_restrict(s, {0, 3}, true).R, s.R);
}

TEST(SwapRoles, IsAnIsomorphism) {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    BicirculantSpec s = random_spec(rng, 20);
    BicirculantSpec w = swap_roles(s);
    // u_i <-> v_i, spoke u_i v_{i+c} becomes u_{i+c} v_i.
    std::set<std::pair<int, int>> image;
    const int m = s.m;
    for (auto [x, y] : brute_graph(s).edges) {
      auto f = [&](int z) { return z < m ? m + z : z - m; };
      image.insert(std::minmax(f(x), f(y)));
    }
    EXPECT_EQ(image, brute_graph(w).edges) << format_spec(s);
  }
}

TEST(Arithmetic, Basics) {
  EXPECT_EQ(mod(-1, 5), 4);
  EXPECT_EQ(gcd(0, 6), 6);
  EXPECT_EQ(mod(inverse_mod(7, 30) * 7, 30), 1);
  EXPECT_EQ(spoke_gcd(9240, {0, 70, 220, 154}), 2);
}

}  // namespace
}  // namespace bicirc
