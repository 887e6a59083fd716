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

#include "bicirc/constructions.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "bicirc/errors.hpp"
#include "bicirc/verify.hpp"
#include "family_generators.hpp"
#include "test_oracle.hpp"

namespace bicirc {
namespace {

using testing::brute_graph;
using testing::make;
using testing::md;

void expect_hamiltonian(const BicirculantSpec& s, const HamiltonWitness& w) {
  auto v = check_witness(s, w);
  EXPECT_FALSE(v) << format_spec(s) << ": " << (v ? v->detail : "");
  EXPECT_TRUE(testing::brute_valid(brute_graph(s), s.m, w)) << format_spec(s);
  if (s.order() <= 24) EXPECT_TRUE(testing::brute_hamiltonian(brute_graph(s))) << format_spec(s);
}

// ---- uniform grid ------------------------------------------------------------

TEST(UniformGrid, FourColumnsThreeRows) {
  BicirculantSpec s = make(24, {1}, {0, 12}, {4});
  GridRepresentation rep = uniform_params(24, s.S, 1, 4);
  HamiltonWitness w = uniform_grid_cycle(s, rep);
  EXPECT_EQ(w.sequence.size(), 48u);
  expect_hamiltonian(s, w);
  EXPECT_TRUE(testing::grid_discipline(rep, w));
}

TEST(UniformGrid, TwoColumns) {
  // gcd(gcd(m,S), b) = 2: lambda = 1.
  BicirculantSpec s = make(12, {1}, {0, 4}, {2});
  GridRepresentation rep = uniform_params(12, s.S, 1, 2);
  ASSERT_EQ(rep.lambda, 1);
  expect_hamiltonian(s, uniform_grid_cycle(s, rep));
}

TEST(UniformGrid, RandomFamily) {
  std::mt19937 rng(41);
  std::map<std::pair<int, int>, int> shapes;
  int done = 0;
  for (int tries = 0; done < 150 && tries < 200000; ++tries) {
    auto inst = testing::random_uniform(rng, 120);
    if (!inst) continue;
    ++done;
    auto [s, a, b] = *inst;
    GridRepresentation rep = uniform_params(s.m, s.S, a, b);
    ++shapes[{std::min(rep.lambda, 3), std::min(rep.mu, 3)}];
    HamiltonWitness w = uniform_grid_cycle(s, rep);
    expect_hamiltonian(s, w);
    EXPECT_TRUE(testing::grid_discipline(rep, w)) << format_spec(s);
  }
  EXPECT_EQ(done, 150);
  EXPECT_GE(shapes.size(), 6u);
}

TEST(UniformGrid, Preconditions) {
  BicirculantSpec s = make(24, {1}, {0, 12}, {4});
  EXPECT_THROW(uniform_grid_cycle(s, nonuniform_params(24, {0, 12}, 1, 5)), PreconditionViolated);
  BicirculantSpec row = make(18, {1}, {0, 6}, {6});
  GridRepresentation single = uniform_params(18, row.S, 1, 6);
  ASSERT_EQ(single.mu, 0);
  EXPECT_THROW(uniform_grid_cycle(row, single), PreconditionViolated);
  // Three outer vertices per column leave no room for the relay paths.
  EXPECT_THROW(uniform_row_cycle(row, single), ComponentNotHamiltonian);
}

TEST(UniformRow, SingleRowGrids) {
  for (auto [m, S, b] : std::vector<std::tuple<int, std::vector<int>, int>>{
           {10, {0, 2}, 2}, {30, {0, 6}, 6}, {40, {0, 8}, 8}, {42, {0, 6, 12}, 6}, {28, {0, 4}, 4}}) {
    BicirculantSpec s = make(m, {1}, S, {b});
    GridRepresentation rep = uniform_params(m, s.S, 1, b);
    ASSERT_EQ(rep.mu, 0) << format_spec(s);
    HamiltonWitness w = uniform_row_cycle(s, rep);
    expect_hamiltonian(s, w);
    EXPECT_TRUE(testing::grid_discipline(rep, w)) << format_spec(s);
  }
}

TEST(GridSubrectangle, TopRowsOfNonUniform) {
  std::mt19937 rng(43);
  int done = 0;
  for (int tries = 0; done < 40 && tries < 100000; ++tries) {
    auto inst = testing::random_nonuniform(rng, 150);
    if (!inst) continue;
    auto [m, S, a, b] = *inst;
    GridRepresentation rep = nonuniform_params(m, S, a, b);
    ++done;
    BicirculantSpec s = make(m, {a}, S, {rep.b});
    HamiltonWitness w = grid_subrectangle_cycle(s, rep, 0, 0, rep.lambda, rep.mu - 1);
    EXPECT_TRUE(testing::valid_partial_cycle(s, w, rep, rep.mu, rep.lambda + 1)) << format_spec(s);
    EXPECT_THROW(grid_subrectangle_cycle(s, rep, 0, 0, rep.lambda, rep.mu), OutOfGrid);
  }
}

// ---- non-uniform extension ----------------------------------------------------

TEST(Extension, ShortLastRowCycle) {
  BicirculantSpec s = make(30, {1}, {0, 15}, {4});
  GridRepresentation rep = nonuniform_params(30, s.S, 1, 4);
  HamiltonWitness w = nonuniform_extension(s, rep);
  ASSERT_TRUE(w.is_cycle());
  EXPECT_EQ(w.sequence.size(), 60u);
  expect_hamiltonian(s, w);
}

TEST(Extension, ZeroRemainderPathEndpoints) {
  BicirculantSpec s = make(30, {1}, {0, 15}, {7});
  GridRepresentation rep = nonuniform_params(30, s.S, 1, 7);
  HamiltonWitness raw = nonuniform_extension(s, rep);
  ASSERT_FALSE(raw.is_cycle());
  CheckOptions proof_frame;
  proof_frame.endpoints = std::make_pair(outer(7), outer(14));
  EXPECT_FALSE(check_witness(s, raw, proof_frame));
  CheckOptions origin;
  origin.endpoints = std::make_pair(outer(0), outer(7));
  EXPECT_FALSE(check_witness(s, origin_path(rep, raw), origin));
}

// Buckets: (rho > 0, mu odd).
TEST(Extension, BothRemaindersBothParities) {
  std::mt19937 rng(47);
  std::map<std::pair<bool, bool>, int> seen;
  for (int tries = 0; tries < 400000; ++tries) {
    bool full = true;
    for (bool r : {false, true})
      for (bool p : {false, true}) full = full && seen[{r, p}] >= 25;
    if (full) break;
    auto inst = testing::random_nonuniform(rng, 240);
    if (!inst) continue;
    auto [m, S, a, b] = *inst;
    GridRepresentation rep = nonuniform_params(m, S, a, b);
    auto key = std::make_pair(rep.rho > 0, rep.mu % 2 == 1);
    if (seen[key] >= 25) continue;
    ++seen[key];
    BicirculantSpec s = make(m, {a}, S, {rep.b});
    HamiltonWitness w = nonuniform_extension(s, rep);
    SCOPED_TRACE(format_spec(s));
    if (rep.rho > 0) {
      ASSERT_TRUE(w.is_cycle());
      expect_hamiltonian(s, w);
    } else {
      ASSERT_FALSE(w.is_cycle());
      CheckOptions co;
      co.endpoints = std::make_pair(outer(0), outer(rep.b));
      HamiltonWitness p = origin_path(rep, w);
      auto v = check_witness(s, p, co);
      EXPECT_FALSE(v) << (v ? v->detail : "");
    }
  }
  for (bool r : {false, true})
    for (bool p : {false, true}) EXPECT_GE((seen[{r, p}]), 25) << "rho>0=" << r << " mu odd=" << p;
}

TEST(Extension, Preconditions) {
  BicirculantSpec s = make(24, {1}, {0, 12}, {4});
  EXPECT_THROW(nonuniform_extension(s, uniform_params(24, s.S, 1, 4)), PreconditionViolated);
  BicirculantSpec other = make(30, {1}, {0, 15}, {7});
  EXPECT_THROW(nonuniform_extension(other, nonuniform_params(30, {0, 15}, 1, 4)), PreconditionViolated);
}

// ---- 2-hooked -------------------------------------------------------------------

TEST(TwoHooked, ThreeComponents) {
  BicirculantSpec s = make(12, {3}, {0, 6, 2}, {3});
  BicirculantSpec K = make(4, {1}, {0, 2}, {1});
  auto data = testing::hooked_data(K, 1);
  ASSERT_TRUE(data);
  HamiltonWitness w = two_hooked(s, 3, 3, 2, *data);
  EXPECT_EQ(w.sequence.size(), 24u);
  expect_hamiltonian(s, w);
}

TEST(TwoHooked, TwoComponents) {
  BicirculantSpec s = make(12, {2}, {0, 6, 3}, {2});
  BicirculantSpec K = make(6, {1}, {0, 3}, {1});
  auto data = testing::hooked_data(K, 1);
  ASSERT_TRUE(data);
  expect_hamiltonian(s, two_hooked(s, 2, 2, 3, *data));
}

TEST(TwoHooked, GeneratedFamily) {
  std::mt19937 rng(53);
  std::map<int, int> by_delta, built;
  for (int tries = 0; tries < 200000; ++tries) {
    bool full = true;
    for (int d = 2; d <= 5; ++d) full = full && built[d] >= 20;
    if (full) break;
    auto inst = testing::random_hooked(rng);
    if (!inst || built[inst->delta] >= 20) continue;
    ++by_delta[inst->delta];
    SCOPED_TRACE(format_spec(inst->spec) + " c=" + std::to_string(inst->c));
    EdgeProfile prof = witness_edge_profile(inst->data.component, inst->data.cycle);
    if (!prof.has_outer_and_inner()) continue;
    HamiltonWitness w;
    try {
      w = two_hooked(inst->spec, inst->a, inst->b, inst->c, inst->data);
    } catch (const MissingInnerEdge&) {
      continue;  // precondition of the path not met
    }
    ++built[inst->delta];
    expect_hamiltonian(inst->spec, w);
  }
  for (int d = 2; d <= 5; ++d) EXPECT_GE(built[d], 20) << "components " << d;
}

TEST(TwoHooked, Preconditions) {
  BicirculantSpec s = make(12, {3}, {0, 6, 2}, {3});
  BicirculantSpec K = make(4, {1}, {0, 2}, {1});
  auto data = testing::hooked_data(K, 1);
  ASSERT_TRUE(data);
  EXPECT_THROW(two_hooked(s, 3, 3, 6, *data), PreconditionViolated);  // c shares a factor with 3
  HookedComponentData bad = *data;
  std::reverse(bad.path.sequence.begin(), bad.path.sequence.end());
  EXPECT_THROW(two_hooked(s, 3, 3, 2, bad), PreconditionViolated);
}

// ---- brick products --------------------------------------------------------------

TEST(Brick, DegreeProfile) {
  BrickProduct bp = brick_build(8, 4);
  EXPECT_EQ(bp.degree_two(1).size(), 4u);
  EXPECT_EQ(bp.degree_two(4).size(), 4u);
  AdjacencyView g = bp.graph(false);
  int deg2 = 0;
  for (int v = 0; v < g.size(); ++v) {
    EXPECT_TRUE(g.neighbors(v).size() == 2 || g.neighbors(v).size() == 3);
    deg2 += g.neighbors(v).size() == 2;
  }
  EXPECT_EQ(deg2, 8);
  AdjacencyView full = bp.graph(true);
  for (int v = 0; v < full.size(); ++v) EXPECT_EQ(full.neighbors(v).size(), 3u);
  EXPECT_THROW(brick_build(7, 3), OddN);
}

TEST(Brick, SmallestInstance) {
  BrickProduct bp = brick_build(4, 2);
  auto c = brick_plus_matching_cycle(bp);
  EXPECT_EQ(c.size(), 8u);
  EXPECT_TRUE(testing::valid_abstract_cycle(bp.graph(true), c));
}

TEST(Brick, EveryMatchingSmall) {
  for (int n : {4, 6})
    for (int k : {2, 3}) {
      BrickProduct bp = brick_build(n, k);
      auto first = bp.degree_two(1), last = bp.degree_two(k);
      std::vector<int> perm(last.size());
      std::iota(perm.begin(), perm.end(), 0);
      int count = 0;
      do {
        bp.matching.clear();
        for (std::size_t j = 0; j < first.size(); ++j) bp.matching.emplace_back(first[j], last[perm[j]]);
        auto c = brick_plus_matching_cycle(bp);
        EXPECT_TRUE(testing::valid_abstract_cycle(bp.graph(true), c)) << "n=" << n << " k=" << k;
        EXPECT_TRUE(testing::brute_hamiltonian(testing::brute_abstract(bp.graph(true))));
        ++count;
      } while (std::next_permutation(perm.begin(), perm.end()));
      EXPECT_EQ(count, n == 4 ? 2 : 6);
    }
}

TEST(Brick, LargerRandomMatchings) {
  std::mt19937 rng(59);
  for (int rep = 0; rep < 40; ++rep) {
    std::uniform_int_distribution<int> N(2, 12), K(2, 8);
    BrickProduct bp = brick_build(2 * N(rng), K(rng));
    auto first = bp.degree_two(1), last = bp.degree_two(bp.k);
    std::shuffle(last.begin(), last.end(), rng);
    bp.matching.clear();
    for (std::size_t j = 0; j < first.size(); ++j) bp.matching.emplace_back(first[j], last[j]);
    auto c = brick_plus_matching_cycle(bp);
    EXPECT_TRUE(testing::valid_abstract_cycle(bp.graph(true), c)) << "n=" << bp.n << " k=" << bp.k;
  }
}

// ---- congruent types ---------------------------------------------------------------

TEST(Congruent, Routes) {
  EXPECT_EQ(congruent_route(make(21, {2}, {0, 3, 6}, {2}), 2, 2), StrategyTag::CongruentOdd_EqualTypes);
  EXPECT_EQ(congruent_route(make(21, {2}, {0, 3, 6}, {5}), 2, 5), StrategyTag::CongruentOdd_General);
  EXPECT_EQ(congruent_route(make(24, {1}, {0, 4, 8}, {5}), 1, 5), StrategyTag::CongruentEven_Brick);
  EXPECT_THROW(congruent_route(make(25, {1}, {0, 5, 10}, {2}), 1, 2), PreconditionViolated);
}

TEST(Congruent, AllCasesValidate) {
  std::mt19937 rng(61);
  std::map<StrategyTag, int> seen;
  for (int tries = 0; tries < 400000; ++tries) {
    bool full = true;
    for (auto t : {StrategyTag::CongruentOdd_EqualTypes, StrategyTag::CongruentOdd_General,
                   StrategyTag::CongruentEven_Brick})
      full = full && seen[t] >= 30;
    if (full) break;
    auto inst = testing::random_congruent(rng, 120);
    if (!inst) continue;
    auto [s, a, b] = *inst;
    StrategyTag route = congruent_route(s, a, b);
    if (seen[route] >= 30) continue;
    ++seen[route];
    SCOPED_TRACE(format_spec(s) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
    expect_hamiltonian(s, congruent_case(s, a, b));
  }
  for (auto t : {StrategyTag::CongruentOdd_EqualTypes, StrategyTag::CongruentOdd_General,
                 StrategyTag::CongruentEven_Brick})
    EXPECT_GE(seen[t], 30) << to_string(t);
}

TEST(Congruent, EvenCaseFromThirty) {
  BicirculantSpec s = make(30, {1}, {0, 10, 20}, {11});
  ASSERT_EQ(congruent_route(s, 1, 11), StrategyTag::CongruentEven_Brick);
  expect_hamiltonian(s, congruent_case(s, 1, 11));
}

}  // namespace
}  // namespace bicirc
