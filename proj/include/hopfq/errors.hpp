// Copyright 2026 The hopfq Authors
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

namespace hopfq {

/// A precondition of an operation was violated by the caller (bad level,
/// qubit index out of range, invalid permutation, wrong qubit count).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Inversion of an element with zero norm.
struct SingularElementError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Base for every rejection of amplitude data as a valid pure state.
struct StateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Amplitude count does not match 2^n, or n is outside 1..4.
struct ShapeError : StateError {
    using StateError::StateError;
};

/// All amplitudes are zero.
struct DegenerateStateError : StateError {
    using StateError::StateError;
};

/// Norm too far from 1 and normalization was not requested.
struct NormalizationError : StateError {
    using StateError::StateError;
};

/// A computed quantity came out NaN or infinite.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in a bra-ket expression. Line and column are
/// 1-based; columns count code points, not bytes.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : std::runtime_error(
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          message_(message),
          line_(line),
          column_(column) {
    }

    const std::string &message() const noexcept {
        return message_;
    }
    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace hopfq
