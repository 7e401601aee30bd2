// Copyright 2026 The GResilience Authors
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

#ifndef GRESILIENCE_ERRORS_HPP
#define GRESILIENCE_ERRORS_HPP

#include <stdexcept>

namespace gresilience {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a precondition or a type invariant.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Normalization input with no positive entry; tie handling is up to the caller.
class DegenerateInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An event that is not legal in the current recovery state.
class InvalidTransitionError : public Error {
 public:
  using Error::Error;
};

// Malformed scenario or action file; the message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gresilience

#endif  // GRESILIENCE_ERRORS_HPP
