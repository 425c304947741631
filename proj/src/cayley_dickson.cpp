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

#include "hopfq/cayley_dickson.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hopfq/errors.hpp"

namespace hopfq {

namespace {

void check_level(int level) {
    if (level < 0 || level > kMaxLevel) {
        throw ContractError("Cayley-Dickson level must be in 0..4, got " + std::to_string(level));
    }
}

using Buffer = std::array<double, kMaxDim>;

void conj_into(std::span<const double> x, std::span<double> out) {
    out[0] = x[0];
    for (std::size_t k = 1; k < x.size(); k++) {
        out[k] = -x[k];
    }
}

// out = x * y for equally sized spans; out must not alias x or y.
void mul_into(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t n = x.size();
    if (n == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = n / 2;
    auto a = x.first(h);
    auto b = x.subspan(h);
    auto c = y.first(h);
    auto d = y.subspan(h);
    auto lo = out.first(h);
    auto hi = out.subspan(h);

    Buffer conj_c{}, conj_d{}, tmp{};
    conj_into(c, std::span{conj_c}.first(h));
    conj_into(d, std::span{conj_d}.first(h));
    auto t = std::span{tmp}.first(h);

    // lo = a c - conj(d) b
    mul_into(a, c, lo);
    mul_into(std::span<const double>{conj_d}.first(h), b, t);
    for (std::size_t k = 0; k < h; k++) {
        lo[k] -= t[k];
    }
    // hi = d a + b conj(c)
    mul_into(d, a, hi);
    mul_into(b, std::span<const double>{conj_c}.first(h), t);
    for (std::size_t k = 0; k < h; k++) {
        hi[k] += t[k];
    }
}

std::string unit_name(std::size_t k) {
    return k == 0 ? "1" : "i" + std::to_string(k);
}

}  // namespace

CDElement::CDElement(int level) : level_(level) {
    check_level(level);
}

CDElement CDElement::from_coeffs(int level, std::span<const double> coeffs) {
    CDElement r(level);
    if (coeffs.size() != r.dim()) {
        throw ContractError(
            "level " + std::to_string(level) + " needs " + std::to_string(r.dim()) + " coefficients, got " +
            std::to_string(coeffs.size()));
    }
    for (std::size_t k = 0; k < coeffs.size(); k++) {
        if (!std::isfinite(coeffs[k])) {
            throw ContractError("Cayley-Dickson coefficients must be finite");
        }
        r.coeffs_[k] = coeffs[k];
    }
    return r;
}

CDElement CDElement::real(int level, double value) {
    CDElement r(level);
    r.coeffs_[0] = value;
    return r;
}

CDElement CDElement::unit(int level, std::size_t index) {
    CDElement r(level);
    if (index >= r.dim()) {
        throw ContractError("basis index " + std::to_string(index) + " out of range for level " + std::to_string(level));
    }
    r.coeffs_[index] = 1.0;
    return r;
}

CDElement CDElement::from_pair(const CDElement &a, const CDElement &b) {
    if (a.level_ != b.level_) {
        throw ContractError("pair halves must share a level");
    }
    CDElement r(a.level_ + 1);
    const std::size_t h = a.dim();
    std::copy_n(a.coeffs_.begin(), h, r.coeffs_.begin());
    std::copy_n(b.coeffs_.begin(), h, r.coeffs_.begin() + static_cast<std::ptrdiff_t>(h));
    return r;
}

CDElement CDElement::lower_half() const {
    if (level_ == 0) {
        throw ContractError("a real number has no pair decomposition");
    }
    CDElement r(level_ - 1);
    std::copy_n(coeffs_.begin(), r.dim(), r.coeffs_.begin());
    return r;
}

CDElement CDElement::upper_half() const {
    if (level_ == 0) {
        throw ContractError("a real number has no pair decomposition");
    }
    CDElement r(level_ - 1);
    std::copy_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(r.dim()), r.dim(), r.coeffs_.begin());
    return r;
}

bool CDElement::is_real(double tol) const noexcept {
    for (std::size_t k = 1; k < dim(); k++) {
        if (std::abs(coeffs_[k]) >= tol) {
            return false;
        }
    }
    return true;
}

CDElement &CDElement::operator+=(const CDElement &other) {
    if (level_ != other.level_) {
        throw ContractError("level mismatch in addition");
    }
    for (std::size_t k = 0; k < dim(); k++) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

CDElement &CDElement::operator-=(const CDElement &other) {
    if (level_ != other.level_) {
        throw ContractError("level mismatch in subtraction");
    }
    for (std::size_t k = 0; k < dim(); k++) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

CDElement &CDElement::operator*=(double scale) noexcept {
    for (std::size_t k = 0; k < dim(); k++) {
        coeffs_[k] *= scale;
    }
    return *this;
}

std::string CDElement::str() const {
    std::ostringstream out;
    out.precision(17);
    bool first = true;
    for (std::size_t k = 0; k < dim(); k++) {
        if (coeffs_[k] == 0) {
            continue;
        }
        if (!first) {
            out << (coeffs_[k] < 0 ? " - " : " + ");
        } else if (coeffs_[k] < 0) {
            out << "-";
        }
        out << std::abs(coeffs_[k]);
        if (k != 0) {
            out << "*" << unit_name(k);
        }
        first = false;
    }
    return first ? "0" : out.str();
}

CDElement cd_mul(const CDElement &x, const CDElement &y) {
    if (x.level() != y.level()) {
        throw ContractError(
            "cd_mul level mismatch: " + std::to_string(x.level()) + " vs " + std::to_string(y.level()));
    }
    Buffer out{};
    mul_into(x.coeffs(), y.coeffs(), std::span{out}.first(x.dim()));
    return CDElement::from_coeffs(x.level(), std::span<const double>{out}.first(x.dim()));
}

CDElement cd_conj(const CDElement &x) {
    Buffer c{};
    conj_into(x.coeffs(), std::span{c}.first(x.dim()));
    return CDElement::from_coeffs(x.level(), std::span<const double>{c}.first(x.dim()));
}

double cd_norm_sq(const CDElement &x) {
    double s = 0;
    for (double c : x.coeffs()) {
        s += c * c;
    }
    return s;
}

CDElement cd_inverse(const CDElement &x) {
    double n = cd_norm_sq(x);
    if (n == 0) {
        throw SingularElementError("cannot invert an element of zero norm");
    }
    return cd_conj(x) * (1.0 / n);
}

double max_abs_diff(const CDElement &x, const CDElement &y) {
    if (x.level() != y.level()) {
        throw ContractError("max_abs_diff level mismatch");
    }
    double m = 0;
    for (std::size_t k = 0; k < x.dim(); k++) {
        m = std::max(m, std::abs(x[k] - y[k]));
    }
    return m;
}

std::string ZeroDivisorPair::str() const {
    auto term = [](std::size_t p, int s, std::size_t q) {
        return "(" + unit_name(p) + (s > 0 ? " + " : " - ") + unit_name(q) + ")";
    };
    return term(a, sign_b, b) + term(c, sign_d, d) + " = 0";
}

std::vector<ZeroDivisorPair> find_basis_zero_divisors(int level) {
    check_level(level);
    const std::size_t n = std::size_t{1} << level;
    std::vector<ZeroDivisorPair> found;
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = a + 1; b < n; b++) {
            for (int sb : {1, -1}) {
                CDElement x = CDElement::unit(level, a) + sb * CDElement::unit(level, b);
                for (std::size_t c = 0; c < n; c++) {
                    for (std::size_t d = c + 1; d < n; d++) {
                        for (int sd : {1, -1}) {
                            CDElement y = CDElement::unit(level, c) + sd * CDElement::unit(level, d);
                            if (cd_norm_sq(cd_mul(x, y)) < kZeroTolerance * kZeroTolerance) {
                                found.push_back({a, sb, b, c, sd, d, x, y});
                            }
                        }
                    }
                }
            }
        }
    }
    return found;
}

std::vector<BasisProduct> basis_product_table(int level) {
    check_level(level);
    const std::size_t n = std::size_t{1} << level;
    std::vector<BasisProduct> table;
    table.reserve(n * n);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            CDElement p = cd_mul(CDElement::unit(level, a), CDElement::unit(level, b));
            for (std::size_t k = 0; k < n; k++) {
                if (p[k] != 0) {
                    table.push_back({a, b, p[k] > 0 ? 1 : -1, k});
                    break;
                }
            }
        }
    }
    return table;
}

std::string basis_product_table_csv(int level) {
    std::string out = "a,b,sign,index\n";
    for (const auto &e : basis_product_table(level)) {
        out += std::to_string(e.a) + "," + std::to_string(e.b) + "," + (e.sign > 0 ? "+" : "-") + "," +
               std::to_string(e.index) + "\n";
    }
    return out;
}

}  // namespace hopfq
