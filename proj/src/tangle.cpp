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

#include "hopfq/tangle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hopfq/errors.hpp"

namespace hopfq {

namespace {

void require_qubits(const QubitState &state, int lo, int hi, const char *what) {
    const int n = state.num_qubits();
    if (n < lo || n > hi) {
        throw ContractError(
            std::string(what) + " needs " + std::to_string(lo) + ".." + std::to_string(hi) + " qubits, got " +
            std::to_string(n));
    }
}

void require_qubit_index(const QubitState &state, std::size_t qubit) {
    if (qubit >= static_cast<std::size_t>(state.num_qubits())) {
        throw ContractError("qubit index " + std::to_string(qubit) + " out of range");
    }
}

// Index of the basis ket with `bit` at `qubit` and the remaining qubits
// taken, in order, from the bits of `rest`.
std::size_t insert_bit(int n, std::size_t qubit, std::size_t bit, std::size_t rest) {
    const int pos = n - 1 - static_cast<int>(qubit);  // bit position of the qubit
    const std::size_t low_mask = (std::size_t{1} << pos) - 1;
    const std::size_t low = rest & low_mask;
    const std::size_t high = rest >> pos;
    return (high << (pos + 1)) | (bit << pos) | low;
}

constexpr int levi_civita(std::size_t i, std::size_t j) {
    return i == j ? 0 : (i < j ? 1 : -1);
}

}  // namespace

double DensityMatrix2::det() const {
    return entries[0][0].real() * entries[1][1].real() - std::norm(entries[0][1]);
}

DensityMatrix2 partial_trace_to_single(const QubitState &state, std::size_t keep) {
    require_qubits(state, 2, kMaxQubits, "partial_trace_to_single");
    require_qubit_index(state, keep);
    const int n = state.num_qubits();
    const std::size_t rest_dim = state.dim() / 2;
    DensityMatrix2 rho;
    for (std::size_t r = 0; r < 2; r++) {
        for (std::size_t c = 0; c < 2; c++) {
            Amplitude s = 0;
            for (std::size_t rest = 0; rest < rest_dim; rest++) {
                s += state[insert_bit(n, keep, r, rest)] * std::conj(state[insert_bit(n, keep, c, rest)]);
            }
            rho.entries[r][c] = s;
        }
    }
    // Exact Hermiticity: the diagonal is real and the corners conjugate.
    rho.entries[0][0] = rho.entries[0][0].real();
    rho.entries[1][1] = rho.entries[1][1].real();
    rho.entries[1][0] = std::conj(rho.entries[0][1]);
    return rho;
}

double concurrence(const QubitState &state) {
    require_qubits(state, 2, 2, "concurrence");
    return 2 * std::abs(state[0b00] * state[0b11] - state[0b01] * state[0b10]);
}

Amplitude hyperdeterminant_222(const QubitState &state) {
    require_qubits(state, 3, 3, "hyperdeterminant_222");
    auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return state[(i << 2) | (j << 1) | k]; };

    std::array<std::array<Amplitude, 2>, 2> c{};
    for (std::size_t k = 0; k < 2; k++) {
        for (std::size_t n = 0; n < 2; n++) {
            Amplitude s = 0;
            for (std::size_t i = 0; i < 2; i++) {
                for (std::size_t l = 0; l < 2; l++) {
                    for (std::size_t j = 0; j < 2; j++) {
                        for (std::size_t m = 0; m < 2; m++) {
                            s += static_cast<double>(levi_civita(i, l) * levi_civita(j, m)) * a(i, j, k) * a(l, m, n);
                        }
                    }
                }
            }
            c[k][n] = 0.5 * s;
        }
    }
    Amplitude det = 0;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t l = 0; l < 2; l++) {
            for (std::size_t j = 0; j < 2; j++) {
                for (std::size_t m = 0; m < 2; m++) {
                    det += static_cast<double>(levi_civita(i, l) * levi_civita(j, m)) * c[i][j] * c[l][m];
                }
            }
        }
    }
    // With an outer prefactor of 1/2 this contraction equals -Det/4.
    return -2.0 * det;
}

double three_tangle(const QubitState &state) {
    return 4 * std::abs(hyperdeterminant_222(state));
}

double tau_one_rest(const QubitState &state, std::size_t qubit) {
    require_qubits(state, 2, kMaxQubits, "tau_one_rest");
    return std::max(0.0, 4 * partial_trace_to_single(state, qubit).det());
}

std::array<double, 3> two_tangles(const QubitState &state) {
    require_qubits(state, 3, 3, "two_tangles");
    return {tau_one_rest(state, 0), tau_one_rest(state, 1), tau_one_rest(state, 2)};
}

bool separable_one_rest(const QubitState &state, std::size_t qubit, double tol) {
    require_qubits(state, 2, kMaxQubits, "separable_one_rest");
    require_qubit_index(state, qubit);
    const int n = state.num_qubits();
    const std::size_t cols = state.dim() / 2;
    for (std::size_t j = 0; j < cols; j++) {
        for (std::size_t l = j + 1; l < cols; l++) {
            Amplitude minor = state[insert_bit(n, qubit, 0, j)] * state[insert_bit(n, qubit, 1, l)] -
                              state[insert_bit(n, qubit, 0, l)] * state[insert_bit(n, qubit, 1, j)];
            if (std::abs(minor) >= tol) {
                return false;
            }
        }
    }
    return true;
}

std::string_view to_string(ThreeQubitClass c) {
    switch (c) {
        case ThreeQubitClass::fully_separable:
            return "fully-separable";
        case ThreeQubitClass::bi_separable:
            return "bi-separable";
        case ThreeQubitClass::entangled:
            return "entangled";
    }
    return "unknown";
}

ThreeQubitClass classify_three(const QubitState &state, double tol) {
    require_qubits(state, 3, 3, "classify_three");
    for (std::size_t q = 0; q < 3; q++) {
        QubitState moved = permute_qubits(state, front_permutation(3, q));
        if (!separable_one_rest(moved, 0, tol)) {
            continue;
        }
        // Rows are proportional; the larger one is the two-qubit factor.
        double top = 0;
        for (std::size_t k = 0; k < 4; k++) {
            top += std::norm(moved[k]);
        }
        const std::size_t row = top >= 0.5 ? 0 : 1;
        std::vector<Amplitude> rest(moved.amplitudes().begin() + static_cast<std::ptrdiff_t>(4 * row),
                                    moved.amplitudes().begin() + static_cast<std::ptrdiff_t>(4 * row + 4));
        QubitState pair = make_state(2, rest, true);
        return separable_one_rest(pair, 0, tol) ? ThreeQubitClass::fully_separable : ThreeQubitClass::bi_separable;
    }
    return ThreeQubitClass::entangled;
}

}  // namespace hopfq
