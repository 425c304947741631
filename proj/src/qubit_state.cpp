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

#include "hopfq/qubit_state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hopfq/errors.hpp"

namespace hopfq {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw ShapeError("qubit count must be in 1..4, got " + std::to_string(n));
    }
}

struct SlotRule {
    bool conjugate = false;
    bool negate = false;
};

// Per-amplitude conjugation/negation applied when the amplitude is written
// into its complex slot of u1 || u2.
SlotRule slot_rule(int n, EncodingVariant variant, std::size_t k) {
    switch (n) {
        case 3:
            // q2 = a010 + conj(a011) i2, q4 = a110 + conj(a111) i2
            return {k == 3 || k == 7, false};
        case 4: {
            // conj(q4) and conj(q8): first slot conjugated, second negated.
            if (k == 6 || k == 14) {
                return {true, false};
            }
            if (k == 7 || k == 15) {
                return {false, true};
            }
            if (variant == EncodingVariant::consistent) {
                // second slots of q2, q3, q6, q7
                return {k == 3 || k == 5 || k == 11 || k == 13, false};
            }
            return {};
        }
        default:
            return {};
    }
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

double QubitState::norm_sq() const noexcept {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

QubitState make_state(int n, std::span<const Amplitude> amps, bool normalize) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    if (amps.size() != dim) {
        throw ShapeError(
            std::to_string(n) + " qubits need " + std::to_string(dim) + " amplitudes, got " +
            std::to_string(amps.size()));
    }
    double norm_sq = 0;
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw StateError("amplitudes must be finite");
        }
        norm_sq += std::norm(a);
    }
    if (norm_sq == 0) {
        throw DegenerateStateError("all amplitudes are zero");
    }
    if (!normalize && std::abs(norm_sq - 1) > 1e-6) {
        throw NormalizationError("state is not normalized: squared norm is " + std::to_string(norm_sq));
    }
    std::vector<Amplitude> v(amps.begin(), amps.end());
    if (std::abs(norm_sq - 1) > 1e-12) {
        const double scale = 1.0 / std::sqrt(norm_sq);
        for (auto &a : v) {
            a *= scale;
        }
    }
    return QubitState(n, std::move(v));
}

QubitState basis_state(int n, std::size_t index) {
    check_qubit_count(n);
    std::vector<Amplitude> v(std::size_t{1} << n);
    if (index >= v.size()) {
        throw ContractError("basis index out of range");
    }
    v[index] = 1.0;
    return make_state(n, v);
}

QubitState tensor_product(const QubitState &a, const QubitState &b) {
    const int n = a.num_qubits() + b.num_qubits();
    check_qubit_count(n);
    std::vector<Amplitude> v;
    v.reserve(a.dim() * b.dim());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            v.push_back(x * y);
        }
    }
    return make_state(n, v);
}

PairEncoding encode_amplitudes(int n, std::span<const Amplitude> amps, EncodingVariant variant) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    if (amps.size() != dim) {
        throw ShapeError("amplitude count does not match qubit count");
    }
    std::array<double, 2 * kMaxDim> coeffs{};
    for (std::size_t k = 0; k < dim; k++) {
        SlotRule rule = slot_rule(n, variant, k);
        Amplitude a = rule.conjugate ? std::conj(amps[k]) : amps[k];
        if (rule.negate) {
            a = -a;
        }
        coeffs[2 * k] = a.real();
        coeffs[2 * k + 1] = a.imag();
    }
    std::span<const double> all{coeffs.data(), 2 * dim};
    return {CDElement::from_coeffs(n, all.first(dim)), CDElement::from_coeffs(n, all.subspan(dim))};
}

PairEncoding encode_pair(const QubitState &state, EncodingVariant variant) {
    return encode_amplitudes(state.num_qubits(), state.amplitudes(), variant);
}

std::vector<Amplitude> decode_pair(const PairEncoding &pair, EncodingVariant variant) {
    const int n = pair.u1.level();
    check_qubit_count(n);
    if (pair.u2.level() != n) {
        throw ContractError("pair elements must share a level");
    }
    const std::size_t half = pair.u1.dim() / 2;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (std::size_t k = 0; k < amps.size(); k++) {
        const CDElement &u = k < half ? pair.u1 : pair.u2;
        const std::size_t slot = k % half;
        Amplitude a{u[2 * slot], u[2 * slot + 1]};
        SlotRule rule = slot_rule(n, variant, k);
        if (rule.negate) {
            a = -a;
        }
        amps[k] = rule.conjugate ? std::conj(a) : a;
    }
    return amps;
}

QubitState permute_qubits(const QubitState &state, std::span<const std::size_t> perm) {
    const int n = state.num_qubits();
    if (perm.size() != static_cast<std::size_t>(n)) {
        throw ContractError("permutation length must equal the qubit count");
    }
    std::array<bool, kMaxQubits> seen{};
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) {
            throw ContractError("not a permutation of 0..n-1");
        }
        seen[p] = true;
    }
    std::vector<Amplitude> out(state.dim());
    for (std::size_t old_index = 0; old_index < state.dim(); old_index++) {
        std::size_t new_index = 0;
        for (int j = 0; j < n; j++) {
            // qubit q is bit (n-1-q) of the index
            std::size_t bit = (old_index >> (n - 1 - static_cast<int>(perm[static_cast<std::size_t>(j)]))) & 1;
            new_index |= bit << (n - 1 - j);
        }
        out[new_index] = state[old_index];
    }
    return make_state(n, out);
}

std::vector<std::size_t> front_permutation(int n, std::size_t qubit) {
    check_qubit_count(n);
    if (qubit >= static_cast<std::size_t>(n)) {
        throw ContractError("qubit index " + std::to_string(qubit) + " out of range");
    }
    std::vector<std::size_t> perm{qubit};
    for (std::size_t q = 0; q < static_cast<std::size_t>(n); q++) {
        if (q != qubit) {
            perm.push_back(q);
        }
    }
    return perm;
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix_finalize(seed) ^ splitmix_finalize(stream * kGolden + 0x632BE59BD9B4E019ULL)) {
}

StreamRng::result_type StreamRng::operator()() {
    counter_++;
    return splitmix_finalize(key_ + counter_ * kGolden);
}

QubitState random_state(int n, std::uint64_t seed, std::uint64_t stream) {
    check_qubit_count(n);
    StreamRng rng(seed, stream);
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> v(std::size_t{1} << n);
    double norm_sq = 0;
    do {
        norm_sq = 0;
        for (auto &a : v) {
            double re = gauss(rng);
            double im = gauss(rng);
            a = {re, im};
            norm_sq += std::norm(a);
        }
    } while (norm_sq == 0);
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto &a : v) {
        a *= scale;
    }
    return make_state(n, v);
}

}  // namespace hopfq
