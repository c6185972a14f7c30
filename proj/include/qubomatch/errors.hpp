// Copyright 2026 The qubomatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
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

namespace qubomatch {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A value violates the documented domain of a type or operation.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Two vectors that must share a dimension do not.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// A geometric relation was requested between coincident points.
class DegenerateGeometry : public Error {
  public:
    using Error::Error;
};

/// A problem is too large for the requested (exhaustive) method.
class SizeError : public Error {
  public:
    using Error::Error;
};

/// A solver returned an assignment that selects two conflicting vertices.
class InfeasibleSolution : public Error {
  public:
    using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line = 0)
            : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace qubomatch
