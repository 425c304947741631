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

#include "hopfq/fibration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hopfq/errors.hpp"

namespace hopfq {

namespace {

constexpr double kClampSlack = 1e-9;

double clamp_measure(double v) {
    return std::clamp(v, 0.0, 1.0 + kClampSlack);
}

void require_qubits(const QubitState &state, int lo, int hi, const char *what) {
    const int n = state.num_qubits();
    if (n < lo || n > hi) {
        throw ContractError(
            std::string(what) + " needs " + std::to_string(lo) + ".." + std::to_string(hi) + " qubits, got " +
            std::to_string(n));
    }
}

CDElement complex_blocks(int level, std::span<const Amplitude> blocks) {
    std::array<double, kMaxDim> c{};
    for (std::size_t k = 0; k < blocks.size(); k++) {
        c[2 * k] = blocks[k].real();
        c[2 * k + 1] = blocks[k].imag();
    }
    return CDElement::from_coeffs(level, std::span<const double>{c}.first(std::size_t{1} << level));
}

HopfQuotient quotient_two(std::span<const Amplitude> a) {
    using std::conj;
    std::array<Amplitude, 2> blocks{
        conj(a[0b00]) * a[0b10] + conj(a[0b01]) * a[0b11],
        a[0b00] * a[0b11] - a[0b01] * a[0b10],
    };
    return {complex_blocks(2, blocks), std::norm(a[0b10]) + std::norm(a[0b11])};
}

HopfQuotient quotient_three(std::span<const Amplitude> a) {
    using std::conj;
    auto A = [&](unsigned idx) { return a[idx]; };
    std::array<Amplitude, 4> K{
        A(0b000) * conj(A(0b100)) + A(0b001) * conj(A(0b101)) + conj(A(0b110)) * A(0b010) +
            conj(A(0b111)) * A(0b011),
        A(0b001) * A(0b100) - A(0b000) * A(0b101) + conj(A(0b110) * A(0b011) - A(0b111) * A(0b010)),
        A(0b010) * A(0b100) - A(0b110) * A(0b000) + conj(A(0b111) * A(0b001) - A(0b011) * A(0b101)),
        A(0b110) * A(0b001) - A(0b010) * A(0b101) + conj(A(0b111) * A(0b000) - A(0b011) * A(0b100)),
    };
    double den = 0;
    for (unsigned idx = 0b100; idx <= 0b111; idx++) {
        den += std::norm(A(idx));
    }
    return {complex_blocks(3, K), den};
}

HopfQuotient quotient_four(std::span<const Amplitude> a) {
    // q[k] = a[2k] + a[2k+1] i2, no conjugations.
    std::array<CDElement, 8> q;
    for (std::size_t k = 0; k < 8; k++) {
        std::array<Amplitude, 2> pair{a[2 * k], a[2 * k + 1]};
        q[k] = complex_blocks(2, pair);
    }
    auto c = [](const CDElement &x) { return cd_conj(x); };
    const auto &[q1, q2, q3, q4, q5, q6, q7, q8] = q;
    std::array<CDElement, 4> C{
        q1 * c(q5) + c(q6) * q2 + c(q7) * q3 + q4 * c(q8),
        q2 * q5 - q6 * q1 + c(q4 * q7 - q8 * q3),
        q3 * q5 - q7 * q1 + c(q3 * q8 - q6 * q4),
        q2 * q7 - q6 * q3 + c(q8 * q1 - q4 * q5),
    };
    std::array<double, kMaxDim> coeffs{};
    for (std::size_t b = 0; b < 4; b++) {
        std::copy(C[b].coeffs().begin(), C[b].coeffs().end(), coeffs.begin() + static_cast<std::ptrdiff_t>(4 * b));
    }
    double den = 0;
    for (std::size_t k = 4; k < 8; k++) {
        den += cd_norm_sq(q[k]);
    }
    return {CDElement::from_coeffs(4, coeffs), den};
}

}  // namespace

double BaseCoordinates::radius_sq() const {
    double s = delta * delta;
    for (double c : comps) {
        s += c * c;
    }
    return s;
}

std::vector<double> BaseCoordinates::numbered() const {
    std::vector<double> x;
    x.reserve(comps.size() + 1);
    if (n == 2) {
        x.push_back(delta);
        x.insert(x.end(), comps.begin(), comps.end());
    } else {
        x.insert(x.end(), comps.begin(), comps.end());
        x.push_back(delta);
    }
    return x;
}

BaseCoordinates base_coordinates(const PairEncoding &pair) {
    const double n1 = cd_norm_sq(pair.u1);
    const double n2 = cd_norm_sq(pair.u2);
    const CDElement p = cd_mul(pair.u2, cd_conj(pair.u1));

    BaseCoordinates bc;
    bc.n = pair.u1.level();
    bc.comps.resize(p.dim());
    for (std::size_t k = 0; k < p.dim(); k++) {
        bc.comps[k] = 2 * p[k];
    }
    bc.delta = n1 - n2;
    bc.e_complement = 1 - bc.delta * bc.delta - bc.comps[0] * bc.comps[0];
    if (bc.comps.size() > 1) {
        bc.e_complement -= bc.comps[1] * bc.comps[1];
    }
    for (std::size_t k = 2; k < bc.comps.size(); k++) {
        bc.e_sum += bc.comps[k] * bc.comps[k];
    }
    bc.norm_defect = 4 * (n1 * n2 - cd_norm_sq(p));
    return bc;
}

BaseCoordinates base_coordinates(const QubitState &state, EncodingVariant variant) {
    return base_coordinates(encode_pair(state, variant));
}

HopfQuotient hopf_quotient(const QubitState &state) {
    require_qubits(state, 2, 4, "hopf_quotient");
    switch (state.num_qubits()) {
        case 2:
            return quotient_two(state.amplitudes());
        case 3:
            return quotient_three(state.amplitudes());
        default:
            return quotient_four(state.amplitudes());
    }
}

EMeasure e_measure(const QubitState &state, EncodingVariant variant) {
    require_qubits(state, 2, 4, "e_measure");
    BaseCoordinates bc = base_coordinates(state, variant);
    return {clamp_measure(bc.e_complement), clamp_measure(bc.e_sum), bc.norm_defect};
}

BallPoint ball_coordinates(const QubitState &state, EncodingVariant variant) {
    require_qubits(state, 4, 4, "ball_coordinates");
    BaseCoordinates bc = base_coordinates(state, variant);
    return {bc.comps[0], bc.comps[1], bc.delta};
}

bool is_mes(const QubitState &state, double tol, EncodingVariant variant) {
    BallPoint b = ball_coordinates(state, variant);
    return std::abs(b.x) < tol && std::abs(b.y) < tol && std::abs(b.z) < tol;
}

}  // namespace hopfq
