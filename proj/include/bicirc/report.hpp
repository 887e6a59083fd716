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

#include <optional>
#include <string>
#include <vector>

#include "bicirc/graph_core.hpp"
#include "bicirc/witness.hpp"

namespace bicirc {

enum class StrategyTag {
  SmallM,
  ExceptionFamily,
  HaarConnected,
  HalfTurn,
  UniformGrid,
  NonUniformExtension,
  CongruentOdd_EqualTypes,
  CongruentOdd_General,
  CongruentEven_Brick,
  TwoHooked,
  TypeIIRecursion,
  ThreeSpokeReduction,
  ImportedBaseSearch,
  ComponentSplit,
};

const char* to_string(StrategyTag tag);

// One rung of the case ladder: what was tried, on which spec, and how it went.
struct StrategyNode {
  StrategyTag tag;
  BicirculantSpec spec;
  bool succeeded = false;
  std::string note;
  std::vector<StrategyNode> children;
};

enum class Verdict { Hamiltonian, NonHamiltonianException, NoStrategyApplies, Inconclusive, Disconnected };

const char* to_string(Verdict v);

struct SolveReport {
  BicirculantSpec spec;        // as given
  BicirculantSpec normalized;  // 0 in S
  int shift = 0;               // normalized v_i is v_{i+shift} of the input
  Verdict verdict = Verdict::NoStrategyApplies;
  std::optional<HamiltonWitness> witness;  // in the input's labels
  std::optional<ExceptionTag> exception;
  std::vector<StrategyNode> strategy_tree;
  std::vector<SolveReport> components;  // disconnected inputs only
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool resolved() const;
};

}  // namespace bicirc
