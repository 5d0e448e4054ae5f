// Copyright 2026 The dak Authors.
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

namespace dak {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (money literals, instance JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A graph, profile or type violates a structural invariant.
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

/// A neighbor set is too large to enumerate exhaustively.
class EnumerationCapError : public Error {
 public:
  using Error::Error;
};

/// Critical bids were requested for a policy that cannot provide them.
class UnsupportedPolicyError : public Error {
 public:
  using Error::Error;
};

/// A policy broke a contract it declared (feasibility, monotonicity).
class PolicyInconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Unknown policy or payment name.
class RegistryError : public Error {
 public:
  using Error::Error;
};

}  // namespace dak
