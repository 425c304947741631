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
#include <string>
#include <string_view>
#include <vector>

#include "hopfq/qubit_state.hpp"

namespace hopfq {

// Text syntax for states, e.g. "(|0000> + |1111>)/sqrt(2)":
//
//   state   = ["+" | "-"] product { ("+" | "-") product }
//   product = unary { ["*" | "/"] unary }      (juxtaposition multiplies)
//   unary   = ("-" | "+") unary | primary
//   primary = number | "i" | sqrt primary | "(" state ")" | ket
//   sqrt    = "sqrt" | "√"
//   ket     = "|" bit {bit} (">" | "⟩")
//
// Scalars and kets share one expression language; evaluation rejects
// sums of a scalar with a ket, products of two kets, division by a ket
// or by zero, and square roots of anything but a nonnegative real.

/// Parsed expression tree. Every ket in one tree has the same length.
struct StateExpression {
    enum class Kind { scalar, imaginary_unit, sqrt, negate, add, subtract, multiply, divide, ket };

    struct Node {
        Kind kind = Kind::scalar;
        double value = 0;  // scalar literal
        std::string bits;  // ket
        std::size_t line = 1;
        std::size_t column = 1;
        std::vector<Node> children;
    };

    Node root;
    /// Ket length shared by every ket in the tree; 0 if there are none.
    int num_qubits = 0;
};

/// Throws ParseError with the position of the offending token.
StateExpression parse_expression(std::string_view text);

/// Amplitude vector (unnormalized) denoted by a ket-valued expression.
/// Throws ParseError for the semantic errors listed above.
std::vector<Amplitude> evaluate(const StateExpression &expr);

/// parse_expression + evaluate + make_state.
QubitState parse_state(std::string_view text, bool normalize = false);

/// Sum of `coeff|bits>` terms over the nonzero real and imaginary parts,
/// e.g. "0.5|01> - 0.5i|10>". digits >= 17 uses the shortest representation
/// that reads back to the same double, so parse_state(format_state(s))
/// reproduces s exactly.
std::string format_state(const QubitState &state, int digits = 17);

}  // namespace hopfq
