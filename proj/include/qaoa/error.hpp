// Copyright 2026 The qaoa-engine Authors
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
#include <vector>

namespace qaoa {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Assignment length does not match the problem's variable count.
class InvalidAssignment : public Error {
  public:
    using Error::Error;
};

/// A qubit count, grid size or evaluation budget exceeds its configured limit.
class ResourceLimit : public Error {
  public:
    using Error::Error;
};

/// Dimension mismatch between a state and a spectrum.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Qubit index out of range or overlapping control/target sets.
class IndexError : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A structural precondition of an analytic formula does not hold
/// (e.g. a triangle in the coupling graph).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Gate that the OpenQASM exporter cannot express.
class UnsupportedGate : public Error {
  public:
    using Error::Error;
};

/// Requested evaluation method does not apply to the instance.
class UnsupportedMethod : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

/// Problem-file diagnostics. `line()` is 1-based; 0 means "whole file".
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : Error(line == 0 ? message
                          : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Objective returned a non-finite value. Carries the offending angles
/// flattened as (gammas..., betas...).
class NumericError : public Error {
  public:
    NumericError(const std::string &message, std::vector<double> angles)
        : Error(message), angles_(std::move(angles)) {}

    [[nodiscard]] const std::vector<double> &angles() const noexcept {
        return angles_;
    }

  private:
    std::vector<double> angles_;
};

} // namespace qaoa
