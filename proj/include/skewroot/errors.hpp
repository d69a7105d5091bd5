// Copyright 2026 The skewroot authors
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

#include <stdexcept>
#include <string>

namespace skw {

// Base class for every error thrown by this library. Callers that want a
// single catch site can catch this; more specific handlers can use the
// derived types below.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic on exact cyclotomic scalars.
struct DivisionByZero : Error {
  using Error::Error;
};
struct IncompatibleOrders : Error {
  using Error::Error;
};

// Malformed text input (scalar, group, bicharacter, root-system, config).
struct ParseError : Error {
  using Error::Error;
};

// Group / element plumbing.
struct MismatchedGroups : Error {
  using Error::Error;
};
struct NotASubgroup : Error {
  using Error::Error;
};

// Symplectic-structure constraints.
struct NotAlternating : Error {
  using Error::Error;
};
struct NotWellDefined : Error {
  using Error::Error;
};
struct NotDivision : Error {
  using Error::Error;
};
struct NotABicharacter : Error {
  using Error::Error;
};
struct MismatchedAlgebras : Error {
  using Error::Error;
};

// Root-system operations.
struct NotValidated : Error {
  using Error::Error;
};
struct NotInRadical : Error {
  using Error::Error;
};
struct KindMismatch : Error {
  using Error::Error;
};

// Graded-algebra operations.
struct CocycleMismatch : Error {
  using Error::Error;
};
struct NotSemisimple : Error {
  using Error::Error;
};
struct NotPulledBack : Error {
  using Error::Error;
};

// Family constructors outside their validity range.
struct RangeError : Error {
  using Error::Error;
};

// Enumeration / search work exceeded the caller-supplied budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace skw
