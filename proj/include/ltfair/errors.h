// Copyright 2026 The ltfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LTFAIR_ERRORS_H_
#define LTFAIR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ltfair {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller input that is not tied to instance structure
// (out-of-range item ids, coordinates outside [0,1], dimension mismatch).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// Malformed instance or result file. The message carries the line or the
// JSON path of the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A solver was handed an instance outside its declared domain
// (overlapping or non-covering groups for the deterministic solvers).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The fairness polytope is empty.
class EmptyPolytope : public Error {
 public:
  using Error::Error;
};

// The rounded-bounds relaxation used by the greedy solver has no feasible set.
class InfeasibleRelaxation : public Error {
 public:
  using Error::Error;
};

// No distribution over budget-feasible sets meets the expected-count bounds.
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

class EnumerationBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ltfair

#endif  // LTFAIR_ERRORS_H_
