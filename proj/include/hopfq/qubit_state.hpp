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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hopfq/cayley_dickson.hpp"

namespace hopfq {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 4;

/// Normalized pure state of 1..4 qubits. amplitudes()[k] is the coefficient
/// of the basis ket whose bitstring is k written with qubit A as the most
/// significant bit, so |ABCD> sits at 8A + 4B + 2C + D.
///
/// Only make_state and the functions below construct one, so every
/// instance satisfies |sum |a_k|^2 - 1| < 1e-9 with finite components.
class QubitState {
   public:
    int num_qubits() const noexcept {
        return n_;
    }
    std::size_t dim() const noexcept {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    const Amplitude &operator[](std::size_t k) const {
        return amps_[k];
    }
    double norm_sq() const noexcept;

    bool operator==(const QubitState &) const = default;

   private:
    QubitState(int n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {
    }
    friend QubitState make_state(int n, std::span<const Amplitude> amps, bool normalize);

    int n_ = 1;
    std::vector<Amplitude> amps_;
};

/// Validates amplitudes into a state.
///
/// Throws ShapeError (n outside 1..4, or amps.size() != 2^n), StateError
/// (non-finite component), DegenerateStateError (zero vector) and, when
/// normalize is false, NormalizationError if |norm^2 - 1| > 1e-6. Inputs
/// within 1e-12 of unit norm are kept exactly; anything else accepted is
/// rescaled to unit norm.
QubitState make_state(int n, std::span<const Amplitude> amps, bool normalize = false);

inline QubitState make_state(int n, std::initializer_list<Amplitude> amps, bool normalize = false) {
    return make_state(n, std::span<const Amplitude>{amps.begin(), amps.size()}, normalize);
}

/// Computational basis state |index> of n qubits.
QubitState basis_state(int n, std::size_t index);

/// |a> (x) |b>, with a's qubits first. Total qubit count must stay <= 4.
QubitState tensor_product(const QubitState &a, const QubitState &b);

/// Which conjugation pattern the four-qubit encoding uses. For n <= 3 both
/// variants are the same map.
enum class EncodingVariant {
    /// Besides the whole-quaternion conjugations of q4 and q8, the second
    /// complex slot of q2, q3, q6 and q7 is conjugated. This is the pattern
    /// under which the complex part of u2*conj(u1) is the inner product of
    /// the A=0 and A=1 rows for every input, real or complex.
    consistent,
    /// Conjugations exactly as the original construction prints them
    /// (only q4 and q8 are conjugated). Agrees with `consistent` on real
    /// amplitudes.
    as_printed,
};

/// The pair (u1, u2) of Cayley-Dickson elements of level n holding an
/// n-qubit state: complex numbers, quaternions, octonions or sedenions.
struct PairEncoding {
    CDElement u1;
    CDElement u2;
};

/// Builds the pair by Cayley-Dickson doubling of the amplitudes:
///
///   n=1: u1 = a0, u2 = a1
///   n=2: q1 = a00 + a01 i2,  q2 = a10 + a11 i2
///   n=3: q1 = a000 + a001 i2, q2 = a010 + conj(a011) i2,
///        q3 = a100 + a101 i2, q4 = a110 + conj(a111) i2,
///        o1 = q1 + q2 i4, o2 = q3 + q4 i4
///   n=4: eight quaternions q1..q8 from consecutive amplitude pairs,
///        o1 = q1 + q2 i4, o2 = q3 + conj(q4) i4, o3 = q5 + q6 i4,
///        o4 = q7 + conj(q8) i4, s1 = o1 + o2 i8, s2 = o3 + o4 i8
///        (plus the extra slot conjugations of EncodingVariant::consistent).
///
/// Every amplitude lands in its own complex slot of u1 || u2, in index order,
/// possibly conjugated or negated, so the map is a real-linear isometry.
PairEncoding encode_pair(const QubitState &state, EncodingVariant variant = EncodingVariant::consistent);

/// Same map on raw amplitudes, without validating normalization.
PairEncoding encode_amplitudes(
    int n, std::span<const Amplitude> amps, EncodingVariant variant = EncodingVariant::consistent);

/// Inverse of encode_amplitudes.
std::vector<Amplitude> decode_pair(const PairEncoding &pair, EncodingVariant variant = EncodingVariant::consistent);

/// perm[j] is the original qubit that ends up at position j. Throws
/// ContractError unless perm is a bijection on 0..n-1.
QubitState permute_qubits(const QubitState &state, std::span<const std::size_t> perm);

/// Permutation bringing `qubit` to position 0, others keeping their order.
std::vector<std::size_t> front_permutation(int n, std::size_t qubit);

/// Haar-random state: i.i.d. standard Gaussian real and imaginary parts,
/// normalized. Deterministic in (n, seed, stream); distinct streams are
/// independent, so batch sample i can be drawn as stream i in any order.
QubitState random_state(int n, std::uint64_t seed, std::uint64_t stream = 0);

/// Counter-based 64-bit generator keyed by (seed, stream): output k is a
/// SplitMix64 finalization of key + k * golden gamma. Satisfies
/// UniformRandomBitGenerator.
class StreamRng {
   public:
    using result_type = std::uint64_t;

    StreamRng(std::uint64_t seed, std::uint64_t stream);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return ~result_type{0};
    }
    result_type operator()();

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace hopfq
