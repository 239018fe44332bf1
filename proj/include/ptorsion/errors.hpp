// Copyright 2026 The ptorsion Authors
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

namespace ptorsion {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A name (piece, binding, edge, torus) that does not exist in the domain,
// or exists with the wrong attachment kind.
class InvalidReference : public Error {
 public:
  using Error::Error;
};

// An operation was called on input that violates its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input data break a structural invariant of a domain type.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the range of int64_t.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace ptorsion
