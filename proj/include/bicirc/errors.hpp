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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicirc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class SpecError : public Error {
 public:
  enum class Kind { NonSymmetricSet, ZeroInRT, EmptyS, BadModulus };
  SpecError(Kind k, const std::string& what) : Error(what), kind(k) {}
  Kind kind;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class HalfTurnType : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class CongruentTypes : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class NotCoprime : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class TooSmall : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class OddN : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class OutOfGrid : public Error {
 public:
  using Error::Error;
};

class ComponentNotHamiltonian : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class MissingInnerEdge : public Error {
 public:
  using Error::Error;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

// A construction produced an edge set that is not a single Hamilton cycle.
class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace bicirc
