// Copyright 2026 The apolarkit Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolarkit {

/// Base of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or configuration text. `position` is a byte offset
/// into the parsed input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain (shape mismatch, bad degree,
/// characteristic too small, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two scalars or containers from different fields met in one computation.
class FieldMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A randomized or sampled computation could not reach a certified answer
/// (gcd did not stabilize, interpolation system had the wrong corank, ...).
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace apolarkit
