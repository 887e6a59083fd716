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

// Tables emitted by tools/gen_grid_patterns.py.

#include "grid_patterns.hpp"

#include <numeric>

namespace bicirc::detail {

const GridPattern kPattern6[4] = {
    {6, 6, {{{62, 1, 2}, {54, 16, 10}, {54, 1, 10}, {62, 0, 2}},
       {{29, 5, 32}, {48, 20, 10}, {17, 5, 40}, {58, 0, 8}},
       {{29, 5, 2}, {48, 20, 10}, {17, 5, 10}, {58, 0, 2}},
       {{61, 4, 0}, {53, 16, 0}, {53, 4, 0}, {61, 0, 0}}}},
    {6, 7, {{{62, 1, 2}, {58, 4, 10}, {58, 1, 10}, {59, 0, 8}},
       {{60, 5, 2}, {48, 20, 10}, {48, 5, 10}, {53, 0, 2}},
       {{60, 5, 2}, {48, 20, 10}, {48, 5, 10}, {53, 0, 8}},
       {{61, 4, 0}, {57, 4, 0}, {57, 4, 0}, {59, 0, 0}}}},
    {7, 6, {{{62, 1, 2}, {58, 4, 10}, {58, 1, 10}, {31, 0, 32}},
       {{60, 5, 2}, {48, 20, 10}, {48, 5, 10}, {29, 0, 2}},
       {{60, 5, 2}, {48, 20, 10}, {48, 5, 10}, {29, 0, 32}},
       {{61, 4, 0}, {57, 4, 0}, {57, 4, 0}, {61, 0, 0}}}},
    {7, 7, {{{31, 1, 32}, {29, 4, 34}, {29, 1, 34}, {61, 0, 2}},
       {{23, 17, 8}, {20, 5, 10}, {20, 17, 10}, {58, 0, 8}},
       {{27, 5, 32}, {24, 5, 34}, {24, 5, 34}, {58, 0, 2}},
       {{59, 4, 0}, {53, 16, 0}, {53, 4, 0}, {55, 0, 0}}}},
};
const GridPattern kPattern4[4] = {
    {6, 6, {{{14, 1, 2}, {10, 4, 10}, {10, 1, 10}, {7, 0, 8}},
       {{10, 5, 8}, {0, 5, 10}, {0, 5, 10}, {10, 0, 2}},
       {{10, 5, 2}, {0, 5, 10}, {0, 5, 10}, {10, 0, 8}},
       {{13, 4, 0}, {9, 4, 0}, {9, 4, 0}, {11, 0, 0}}}},
    {6, 7, {{{14, 1, 2}, {10, 4, 10}, {10, 1, 10}, {13, 0, 2}},
       {{5, 5, 8}, {0, 5, 10}, {0, 5, 10}, {12, 0, 2}},
       {{5, 5, 2}, {0, 5, 10}, {0, 5, 10}, {12, 0, 2}},
       {{13, 4, 0}, {9, 4, 0}, {9, 4, 0}, {13, 0, 0}}}},
    {7, 6, {{{7, 1, 8}, {5, 4, 10}, {10, 1, 10}, {7, 0, 8}},
       {{10, 5, 2}, {0, 5, 10}, {0, 5, 10}, {5, 0, 2}},
       {{5, 5, 8}, {0, 5, 10}, {0, 5, 10}, {10, 0, 8}},
       {{13, 4, 0}, {9, 4, 0}, {9, 4, 0}, {13, 0, 0}}}},
    {7, 7, {{{7, 1, 8}, {10, 4, 10}, {10, 1, 10}, {11, 0, 8}},
       {{10, 5, 2}, {0, 5, 10}, {0, 5, 10}, {5, 0, 2}},
       {{10, 5, 8}, {0, 5, 10}, {0, 5, 10}, {5, 0, 8}},
       {{13, 4, 0}, {9, 4, 0}, {9, 4, 0}, {13, 0, 0}}}},
};

int cell_class(int x, int count) {
  if (x == 0) return 0;
  if (x == count - 1) return 3;
  return 1 + (x - 1) % 2;
}

const CellRule& rule_for(int labels, int rows, int cols, int i, int j) {
  const GridPattern* set = labels == 6 ? kPattern6 : kPattern4;
  const GridPattern& p = set[(rows % 2) * 2 + (cols % 2)];
  return p.rules[cell_class(i, rows)][cell_class(j, cols)];
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool pattern_valid(int labels, int rows, int cols) {
  if (rows < 2 || cols < 2 || (labels != 4 && labels != 6)) return false;
  const int L = labels;
  auto id = [&](int i, int j, int a) { return (i * cols + j) * L + a; };
  const int n = rows * cols * L;
  std::vector<int> deg(n, 0), parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> used;
  auto link = [&](int x, int y) {
    ++deg[x];
    ++deg[y];
    parent[find(parent, x)] = find(parent, y);
    used.push_back({std::min(x, y), std::max(x, y)});
  };
  auto has = [&](int x, int y) {
    std::pair<int, int> e{std::min(x, y), std::max(x, y)};
    for (auto& u : used)
      if (u == e) return true;
    return false;
  };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const CellRule& r = rule_for(L, rows, cols, i, j);
      for (int a = 0; a < L; ++a) {
        if (r.internal >> a & 1) link(id(i, j, a), id(i, j, (a + 1) % L));
        if (r.right >> a & 1) {
          if (j + 1 >= cols || a % 2 != 0) return false;
          link(id(i, j, a), id(i, j + 1, a));
        }
        if (r.down >> a & 1) {
          if (i + 1 >= rows || a % 2 != 1) return false;
          link(id(i, j, a), id(i + 1, j, a));
        }
      }
      if (L == 6 && !(r.internal >> 4 & 1)) return false;
    }
  for (int v = 0; v < n; ++v)
    if (deg[v] != 2 || find(parent, v) != find(parent, 0)) return false;
  const int alpha = (cols - 1) % 2 == 1 ? 0 : 2;
  if (!has(id(0, 0, 0), id(0, 1, 0)) || !has(id(0, cols - 2, alpha), id(0, cols - 1, alpha)))
    return false;
  for (int j = 0; j + 1 < cols; ++j)
    if (!has(id(rows - 1, j, L - 1), id(rows - 1, j, 0)) || !has(id(rows - 1, j, 0), id(rows - 1, j, 1)))
      return false;
  return true;
}

}  // namespace bicirc::detail
