// Copyright 2026 The fockline Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace fockline {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Occupation vector or matrix of the wrong size.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Two states (or a state and an operation) refer to different registries.
class RegistryMismatch : public Error {
  public:
    using Error::Error;
};

/// A mode label or path is not present in the registry.
class UnregisteredMode : public Error {
  public:
    using Error::Error;
};

/// Normalization of a zero (or numerically zero) state.
class DegenerateState : public Error {
  public:
    using Error::Error;
};

/// A precondition of an operation does not hold (non-unitary matrix,
/// too many photons, non-normalized input).
class ContractError : public Error {
  public:
    using Error::Error;
};

class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// A herald pattern has no feed-forward rule.
class UnhandledHerald : public Error {
  public:
    using Error::Error;
};

/// Malformed structured-text input. Line and column are 1-based; 0 when
/// unknown.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line = 0,
               std::size_t column = 0)
        : Error(line == 0 ? what
                          : "parse error at line " + std::to_string(line) +
                                ", column " + std::to_string(column) + ": " +
                                what),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace fockline
