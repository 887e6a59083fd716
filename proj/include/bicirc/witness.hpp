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

#include <vector>

#include "bicirc/graph_core.hpp"

namespace bicirc {

struct HamiltonWitness {
  enum class Kind { Cycle, Path };
  Kind kind = Kind::Cycle;
  std::vector<Vertex> sequence;

  bool is_cycle() const { return kind == Kind::Cycle; }
  const Vertex& start() const { return sequence.front(); }
  const Vertex& end() const { return sequence.back(); }

  static HamiltonWitness cycle(std::vector<Vertex> seq) {
    return {Kind::Cycle, std::move(seq)};
  }
  static HamiltonWitness path(std::vector<Vertex> seq) {
    return {Kind::Path, std::move(seq)};
  }
};

}  // namespace bicirc
