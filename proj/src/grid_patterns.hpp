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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bicirc::detail {

// Per-cell stitching choice. Bit a of `internal` keeps the abstract edge
// A_a A_{a+1 mod L}; bit a of `right`/`down` links label A_a to the same
// label in the cell to the right / below.
struct CellRule {
  std::uint8_t internal, right, down;
};

// Rules by (row class, column class); classes are first, odd middle, even
// middle, last.
struct GridPattern {
  int train_rows, train_cols;
  CellRule rules[4][4];
};

// Six labels c0..c4, c_{2n-1} with the arc c4..c_{2n-1} forced (n >= 3), or
// the four vertices of a 4-cycle component (n == 2).
extern const GridPattern kPattern6[4];
extern const GridPattern kPattern4[4];

int cell_class(int x, int count);
const CellRule& rule_for(int labels, int rows, int cols, int i, int j);

// Re-checks the periodic pattern on a rows x cols grid: one cycle, joining
// edges present, bottom-row pockets intact.
bool pattern_valid(int labels, int rows, int cols);

}  // namespace bicirc::detail
