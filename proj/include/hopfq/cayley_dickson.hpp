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
#include <span>
#include <string>
#include <vector>

namespace hopfq {

inline constexpr int kMaxLevel = 4;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxLevel;

/// Absolute threshold below which a unit-scaled quantity counts as zero.
inline constexpr double kZeroTolerance = 1e-12;

/// An element of the Cayley-Dickson algebra of dimension 2^level over the
/// reals: level 0 = reals, 1 = complex, 2 = quaternions, 3 = octonions,
/// 4 = sedenions. coeffs()[k] is the coefficient of the basis unit i_k,
/// with i_0 = 1.
///
/// A level-(L+1) element is the pair (a, b) = a + b*u of level-L elements,
/// where u = i_{2^L} is the unit introduced by the doubling. Products follow
///
///     (a, b)(c, d) = (a c - conj(d) b,  d a + b conj(c))
///
/// which gives i_1 i_2 = +i_3 and, for every a, b, i_a i_b = +-i_{a xor b}.
class CDElement {
   public:
    CDElement() = default;

    /// The zero element of the given level.
    explicit CDElement(int level);

    static CDElement from_coeffs(int level, std::span<const double> coeffs);
    static CDElement real(int level, double value);
    static CDElement unit(int level, std::size_t index);
    /// a + b*u one level above a and b.
    static CDElement from_pair(const CDElement &a, const CDElement &b);

    int level() const noexcept {
        return level_;
    }
    std::size_t dim() const noexcept {
        return std::size_t{1} << level_;
    }
    std::span<const double> coeffs() const noexcept {
        return {coeffs_.data(), dim()};
    }
    double operator[](std::size_t k) const {
        return coeffs_[k];
    }
    double real_part() const noexcept {
        return coeffs_[0];
    }

    /// Halves of the pair decomposition; level must be >= 1.
    CDElement lower_half() const;
    CDElement upper_half() const;

    bool is_real(double tol = kZeroTolerance) const noexcept;

    CDElement &operator+=(const CDElement &other);
    CDElement &operator-=(const CDElement &other);
    CDElement &operator*=(double scale) noexcept;

    friend CDElement operator+(CDElement lhs, const CDElement &rhs) {
        return lhs += rhs;
    }
    friend CDElement operator-(CDElement lhs, const CDElement &rhs) {
        return lhs -= rhs;
    }
    friend CDElement operator*(CDElement lhs, double scale) {
        return lhs *= scale;
    }
    friend CDElement operator*(double scale, CDElement rhs) {
        return rhs *= scale;
    }
    CDElement operator-() const {
        return *this * -1.0;
    }

    bool operator==(const CDElement &) const = default;

    std::string str() const;

   private:
    int level_ = 0;
    std::array<double, kMaxDim> coeffs_{};
};

/// Cayley-Dickson product. Throws ContractError on level mismatch.
CDElement cd_mul(const CDElement &x, const CDElement &y);
inline CDElement operator*(const CDElement &x, const CDElement &y) {
    return cd_mul(x, y);
}

CDElement cd_conj(const CDElement &x);
double cd_norm_sq(const CDElement &x);
/// conj(x) / |x|^2. Throws SingularElementError when |x|^2 == 0.
CDElement cd_inverse(const CDElement &x);

/// Largest absolute coefficient difference. Levels must agree.
double max_abs_diff(const CDElement &x, const CDElement &y);

/// One signed basis pair (i_a + sign_b i_b)(i_c + sign_d i_d) whose product vanishes.
struct ZeroDivisorPair {
    std::size_t a;
    int sign_b;
    std::size_t b;
    std::size_t c;
    int sign_d;
    std::size_t d;
    CDElement left;
    CDElement right;

    std::string str() const;
};

/// Exhaustive search over (e_a +- e_b)(e_c +- e_d) with a < b, c < d. Empty
/// for every division algebra (levels 0..3).
std::vector<ZeroDivisorPair> find_basis_zero_divisors(int level);

/// i_a * i_b = sign * i_index.
struct BasisProduct {
    std::size_t a;
    std::size_t b;
    int sign;
    std::size_t index;
};

std::vector<BasisProduct> basis_product_table(int level);

/// CSV with header `a,b,sign,index`, sign written as `+` or `-`.
std::string basis_product_table_csv(int level);

}  // namespace hopfq
