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

#include <vector>

#include "hopfq/cayley_dickson.hpp"
#include "hopfq/qubit_state.hpp"

namespace hopfq {

/// Base point of the Hopf-type map for a state with pair encoding (u1, u2).
///
/// With P = u2 * conj(u1):
///   comps[0] = 2 Re(P), comps[k] = 2 * (i_k coefficient of P) for k >= 1,
///   delta = |u1|^2 - |u2|^2.
/// These are the inverse-stereographic coordinates of u1 u2^-1 written as
/// quadratic forms, so u2 = 0 (the point at infinity) needs no special case.
/// For n <= 3 the point lies on the unit sphere S^(2^n).
///
/// Two-qubit numbering: X1 = delta, X2..X5 = comps[0..3]. Three and four
/// qubits: X1 = comps[0], X(k+1) = +-comps[k], X(2^n + 1) = delta.
struct BaseCoordinates {
    int n = 0;
    std::vector<double> comps;
    double delta = 0;
    /// 1 - delta^2 - comps[0]^2 - comps[1]^2
    double e_complement = 0;
    /// sum over k >= 2 of comps[k]^2
    double e_sum = 0;
    /// 4 (|u1|^2 |u2|^2 - |P|^2) = e_complement - e_sum; zero in division algebras.
    double norm_defect = 0;

    /// delta^2 + sum comps^2
    double radius_sq() const;
    /// Coordinates in the X1, X2, ... numbering described above.
    std::vector<double> numbered() const;
};

BaseCoordinates base_coordinates(const PairEncoding &pair);
BaseCoordinates base_coordinates(const QubitState &state, EncodingVariant variant = EncodingVariant::consistent);

/// The explicit quotient u1 u2^-1 = numerator / denominator as the closed
/// forms K1..K4 (three qubits, octonion blocks at 1, i2, i4, i6) and
/// C1..C4 (four qubits, quaternion blocks at 1, i4, i8, i12) are printed,
/// and for two qubits numerator (conj(a00) a10 + conj(a01) a11) +
/// (a00 a11 - a01 a10) i2 over |a10|^2 + |a11|^2.
///
/// Relation to cd_mul under this library's convention: for n = 2 the
/// numerator is conj(u1 conj(u2)) = u2 conj(u1); for n = 3 it equals
/// u1 conj(u2) with the i6 block negated. A zero denominator marks the
/// point at infinity.
struct HopfQuotient {
    CDElement numerator;
    double denominator = 0;
};

/// Requires n in 2..4.
HopfQuotient hopf_quotient(const QubitState &state);

struct EMeasure {
    double e_complement = 0;
    double e_sum = 0;
    double norm_defect = 0;
};

/// Both expressions of the one-vs-rest measure E for qubit A, each clamped
/// to [0, 1 + 1e-9]. They agree for n <= 3; for n = 2 they equal the
/// squared concurrence and for n = 3 the tangle 4 det(rho_A). e_complement
/// is the headline value.
EMeasure e_measure(const QubitState &state, EncodingVariant variant = EncodingVariant::consistent);

struct BallPoint {
    double x = 0;
    double y = 0;
    double z = 0;

    double radius_sq() const {
        return x * x + y * y + z * z;
    }
};

/// (comps[0], comps[1], delta) of a four-qubit state; radius^2 = 1 - E.
/// Product states qubit-A (x) rest sit on the unit sphere, E = 1 states
/// at the origin.
BallPoint ball_coordinates(const QubitState &state, EncodingVariant variant = EncodingVariant::consistent);

/// Four-qubit maximally entangled state test: |comps[0]|, |comps[1]| and
/// |delta| all below tol.
bool is_mes(const QubitState &state, double tol = 1e-9, EncodingVariant variant = EncodingVariant::consistent);

}  // namespace hopfq
