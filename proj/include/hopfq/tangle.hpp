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

#include <array>
#include <cstddef>
#include <string_view>

#include "hopfq/qubit_state.hpp"

namespace hopfq {

// Entanglement measures computed straight from the amplitudes, without
// any Cayley-Dickson machinery. They serve as the reference the fibration
// quantities are checked against.

inline constexpr double kSeparabilityTolerance = 1e-9;

/// Reduced single-qubit density matrix.
struct DensityMatrix2 {
    std::array<std::array<Amplitude, 2>, 2> entries{};

    const Amplitude &operator()(std::size_t r, std::size_t c) const {
        return entries[r][c];
    }
    double trace() const {
        return entries[0][0].real() + entries[1][1].real();
    }
    /// Real for a Hermitian matrix: rho00 rho11 - |rho01|^2.
    double det() const;
};

/// rho[r][c] = sum over the other qubits of a(r, rest) conj(a(c, rest)).
/// Requires n >= 2 and keep < n.
DensityMatrix2 partial_trace_to_single(const QubitState &state, std::size_t keep);

/// Two-qubit pure-state concurrence 2 |a00 a11 - a01 a10|.
double concurrence(const QubitState &state);

/// Cayley hyperdeterminant of the 2x2x2 amplitude tensor, evaluated as the
/// Levi-Civita contraction
///     c_kn = 1/2 eps^il eps^jm a_ijk a_lmn,   Det = -2 eps^il eps^jm c_ij c_lm,
/// normalized so that Det(GHZ) = 1/4. Requires n = 3.
Amplitude hyperdeterminant_222(const QubitState &state);

/// 4 |Det|. Requires n = 3.
double three_tangle(const QubitState &state);

/// (4 det rho_A, 4 det rho_B, 4 det rho_C). Requires n = 3.
std::array<double, 3> two_tangles(const QubitState &state);

/// 4 det rho_qubit for n in 2..4; the squared concurrence when n = 2.
double tau_one_rest(const QubitState &state, std::size_t qubit);

/// True iff every 2x2 minor of the 2 x 2^(n-1) amplitude matrix whose rows
/// are indexed by `qubit` is smaller than tol in modulus, i.e. the state
/// factors as (that qubit) (x) (the rest). Requires n in 2..4.
bool separable_one_rest(const QubitState &state, std::size_t qubit, double tol = kSeparabilityTolerance);

enum class ThreeQubitClass { fully_separable, bi_separable, entangled };

std::string_view to_string(ThreeQubitClass c);

/// Tries each qubit as the split-off one; bi-separable if any split
/// factors, fully separable if the remaining two-qubit factor also does.
/// Requires n = 3.
ThreeQubitClass classify_three(const QubitState &state, double tol = kSeparabilityTolerance);

}  // namespace hopfq
