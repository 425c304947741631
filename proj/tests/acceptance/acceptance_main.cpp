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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Expected values come from the independent oracles in support/oracles.hpp,
// not from the library under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hopfq/braket.hpp"
#include "hopfq/cayley_dickson.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/fibration.hpp"
#include "hopfq/report.hpp"
#include "hopfq/tangle.hpp"
#include "support/oracles.hpp"

using namespace hopfq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the worst deviation and the first failure message.
class Check {
   public:
    void le(double value, double bound, const std::string &what) {
        if (!(value <= bound)) {
            fail(what + " = " + format_double(value) + " exceeds " + format_double(bound));
        }
    }
    void near(double value, double expected, double tol, const std::string &what) {
        worst_ = std::max(worst_, std::abs(value - expected));
        if (!(std::abs(value - expected) <= tol)) {
            fail(what + " = " + format_double(value) + ", expected " + format_double(expected) + " +- " +
                 format_double(tol));
        }
    }
    void truth(bool ok, const std::string &what) {
        if (!ok) {
            fail(what);
        }
    }
    Outcome done(const std::string &summary) const {
        if (!first_failure_.empty()) {
            return {false, first_failure_ + " (" + std::to_string(failures_) + " failed checks)"};
        }
        return {true, summary + (worst_ > 0 ? "; max deviation " + format_double(worst_) : "")};
    }

   private:
    void fail(const std::string &msg) {
        if (first_failure_.empty()) {
            first_failure_ = msg;
        }
        failures_++;
    }
    std::string first_failure_;
    int failures_ = 0;
    double worst_ = 0;
};

QubitState haar(int n, std::mt19937_64 &rng) {
    auto v = oracle::gaussian_state(std::size_t{1} << n, rng);
    return make_state(n, v);
}

std::vector<oracle::cplx> amps_of(const QubitState &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

QubitState named(const std::string &label) {
    for (const auto &s : reference_states()) {
        if (s.label == label) {
            return parse_state(s.expression, true);
        }
    }
    throw ContractError("unknown reference state " + label);
}

Outcome reference_table() {
    Check c;
    auto rows = verify_paper();
    auto again = verify_paper();
    c.truth(conformance_to_json(rows) == conformance_to_json(again), "conformance table differs between runs");
    c.truth(conformance_to_text(rows) == conformance_to_text(again), "text table differs between runs");
    const std::string text = conformance_to_text(rows);
    int reported = 0;
    for (const auto &r : rows) {
        c.truth(r.match == row_matches(r), r.label + ": match flag disagrees with stored fields");
        if (r.quantity != "E") {
            continue;
        }
        if (r.label == "GHZ4") {
            c.near(r.computed_e_complement, 1, 1e-12, "E(GHZ4)");
        } else if (r.label == "W1") {
            c.near(r.computed_e_complement, 0.75, 1e-12, "E(W1)");
        } else if (r.label == "W0" || r.label == "Phi1" || r.label.rfind("Phi2", 0) == 0) {
            c.truth(std::isfinite(r.computed_e_complement) && std::isfinite(r.computed_e_sum) &&
                        std::isfinite(r.paper_value),
                    r.label + ": missing computed or reference value");
            c.truth(text.find((r.match ? "[match]    " : "[MISMATCH] ") + r.label + " | E ") != std::string::npos,
                    r.label + ": match flag not printed");
            reported++;
        }
    }
    c.truth(reported == 4, "expected W0, Phi1 and both Phi2 rows");
    return c.done(std::to_string(rows.size()) + " rows, reproducible, W0/Phi1/Phi2 flagged explicitly");
}

Outcome three_qubit_equivalence() {
    Check c;
    std::mt19937_64 rng(1);
    for (int t = 0; t < 1000; t++) {
        auto s = haar(3, rng);
        auto rho = oracle::reduced_single(amps_of(s), 0);
        double det = (rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0]).real();
        c.near(e_measure(s).e_complement, 4 * det, 1e-9, "|E - 4 det rho_A|");
    }
    return c.done("1000 Haar states");
}

Outcome concurrence_link() {
    Check c;
    std::mt19937_64 rng(2);
    for (int t = 0; t < 1000; t++) {
        auto s = haar(2, rng);
        double conc = 2 * std::abs(s[0] * s[3] - s[1] * s[2]);
        c.near(e_measure(s).e_complement, conc * conc, 1e-12, "|E - C^2|");
    }
    return c.done("1000 states");
}

Outcome base_sphere() {
    Check c;
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 3; n++) {
        for (int t = 0; t < 1000; t++) {
            c.near(base_coordinates(haar(n, rng)).radius_sq(), 1, 1e-9, "radius^2 - 1");
        }
    }
    for (int t = 0; t < 1000; t++) {
        auto s = haar(4, rng);
        auto bc = base_coordinates(s);
        auto enc = oracle::encode(amps_of(s), true);
        auto u1 = oracle::CD<4>::from(enc.u1.data());
        auto u2 = oracle::CD<4>::from(enc.u2.data());
        double defect = 4 * (u1.norm_sq() * u2.norm_sq() - (u2 * conj(u1)).norm_sq());
        c.near(bc.e_complement - bc.e_sum, defect, 1e-12, "defect identity");
    }
    return c.done("n=2,3 on the sphere; n=4 defect identity");
}

Outcome sensitivity() {
    Check c;
    std::mt19937_64 rng(4);
    int patterns = 0;
    for (int n = 2; n <= 4; n++) {
        for (std::size_t q = 0; q < static_cast<std::size_t>(n); q++) {
            patterns++;
            for (int t = 0; t < 500; t++) {
                // Qubit q is factored from the rest.
                auto lone = haar(1, rng);
                auto rest = haar(n - 1, rng);
                // Move the lone factor from position 0 to position q.
                auto front = front_permutation(n, q);
                std::vector<std::size_t> inverse(front.size());
                for (std::size_t j = 0; j < front.size(); j++) {
                    inverse[front[j]] = j;
                }
                auto s = permute_qubits(tensor_product(lone, rest), inverse);
                auto r = analyze(s, q);
                c.le(r.measure.e_complement, 1e-9, "product e_complement");
                c.truth(separable_one_rest(s, q), "product fails the minor test");
            }
        }
        for (int t = 0; t < 500; t++) {
            auto s = haar(n, rng);
            c.truth(e_measure(s).e_complement > 1e-6, "generic state with e_complement <= 1e-6");
            c.truth(!separable_one_rest(s, 0), "generic state passes the minor test");
        }
    }
    return c.done(std::to_string(patterns) + " split patterns x 500 products, 3 x 500 generic states");
}

Outcome division_boundary() {
    Check c;
    std::mt19937_64 rng(6);
    std::normal_distribution<double> g;
    for (int level = 1; level <= 3; level++) {
        for (int t = 0; t < 1000; t++) {
            std::vector<double> x(std::size_t{1} << level), y(x.size());
            for (std::size_t k = 0; k < x.size(); k++) {
                x[k] = g(rng);
                y[k] = g(rng);
            }
            auto p = CDElement::from_coeffs(level, x) * CDElement::from_coeffs(level, y);
            double expected = 0, nx = 0, ny = 0;
            for (std::size_t k = 0; k < x.size(); k++) {
                nx += x[k] * x[k];
                ny += y[k] * y[k];
            }
            expected = nx * ny;
            c.near(cd_norm_sq(p) / expected, 1, 1e-12, "relative norm defect");
        }
        c.truth(find_basis_zero_divisors(level).empty(), "zero divisor found at level " + std::to_string(level));
    }
    auto pairs = find_basis_zero_divisors(4);
    c.truth(!pairs.empty(), "no sedenion zero divisors found");
    for (const auto &p : pairs) {
        auto l = oracle::CD<4>::from(std::vector<double>(p.left.coeffs().begin(), p.left.coeffs().end()).data());
        auto r = oracle::CD<4>::from(std::vector<double>(p.right.coeffs().begin(), p.right.coeffs().end()).data());
        c.truth((l * r).norm_sq() == 0, p.str() + " is not a zero divisor under the reference product");
    }
    return c.done("levels 1-3 multiplicative, " + std::to_string(pairs.size()) + " sedenion basis pairs");
}

Outcome tangles() {
    Check c;
    auto ghz = named("GHZ3");
    c.near(three_tangle(ghz), 1, 1e-12, "tau_ABC(GHZ3)");
    c.near(4 * std::abs(oracle::cayley_hyperdeterminant(amps_of(ghz))), 1, 1e-12, "reference tau_ABC(GHZ3)");
    for (double t : two_tangles(ghz)) {
        c.near(t, 1, 1e-12, "two-tangle(GHZ3)");
    }
    auto w = named("W3");
    c.le(three_tangle(w), 1e-12, "tau_ABC(W3)");
    for (std::size_t q = 0; q < 3; q++) {
        c.near(two_tangles(w)[q], 8.0 / 9.0, 1e-12, "two-tangle(W3)");
        c.near(oracle::linear_entropy_tangle(amps_of(w), q), 8.0 / 9.0, 1e-12, "reference two-tangle(W3)");
    }
    auto bi = named("|0>(x)Bell");
    c.le(three_tangle(bi), 1e-12, "tau_ABC(|0>Bell)");
    c.le(two_tangles(bi)[0], 1e-12, "tau_A(BC)(|0>Bell)");
    c.near(two_tangles(bi)[1], 1, 1e-12, "tau_B(CA)(|0>Bell)");
    c.truth(classify_three(ghz) == ThreeQubitClass::entangled, "GHZ3 not classified entangled");
    c.truth(classify_three(w) == ThreeQubitClass::entangled, "W3 not classified entangled");
    c.truth(classify_three(bi) == ThreeQubitClass::bi_separable, "|0>Bell not classified bi-separable");
    return c.done("GHZ3, W3, |0>(x)Bell");
}

Outcome ball_map() {
    Check c;
    std::mt19937_64 rng(8);
    for (int t = 0; t < 1000; t++) {
        auto s = haar(4, rng);
        c.near(ball_coordinates(s).radius_sq(), 1 - oracle::linear_entropy_tangle(amps_of(s), 0), 1e-12,
               "radius^2 - (1 - e)");
    }
    c.le(ball_coordinates(named("GHZ4")).radius_sq(), 1e-24, "GHZ4 radius^2");
    for (int t = 0; t < 1000; t++) {
        auto s = tensor_product(haar(1, rng), haar(3, rng));
        c.near(ball_coordinates(s).radius_sq(), 1, 1e-9, "1(x)3 product radius^2");
    }
    return c.done("1000 Haar states, GHZ4 at origin, 1000 products on the boundary");
}

Outcome parser() {
    Check c;
    std::vector<QubitState> corpus;
    for (const auto &s : reference_states()) {
        corpus.push_back(parse_state(s.expression, true));
    }
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 4; n++) {
        for (int t = 0; t < 50; t++) {
            corpus.push_back(haar(n, rng));
        }
    }
    for (const auto &s : corpus) {
        auto back = parse_state(format_state(s));
        c.truth(back.num_qubits() == s.num_qubits(), "qubit count changed in round trip");
        for (std::size_t k = 0; k < s.dim(); k++) {
            c.near(std::abs(back[k] - s[k]), 0, 1e-12, "round-trip amplitude");
        }
    }

    const std::string alphabet = "|01>()+-*/ i.e5sqrt\n\x00\xe2\x88\x9a\x9f\xa9";
    std::size_t parsed = 0, rejected = 0;
    for (int t = 0; t < 100000; t++) {
        std::string text;
        if (t % 2 == 0) {
            text = format_state(corpus[rng() % corpus.size()], 6);
            for (int e = 0, edits = 1 + static_cast<int>(rng() % 5); e < edits && !text.empty(); e++) {
                std::size_t pos = rng() % text.size();
                text[pos] = alphabet[rng() % alphabet.size()];
            }
        } else {
            text.resize(rng() % 32);
            for (auto &ch : text) {
                ch = static_cast<char>(rng() % 256);
            }
        }
        try {
            parse_state(text, rng() % 2 == 0);
            parsed++;
        } catch (const ParseError &) {
            rejected++;
        } catch (const StateError &) {
            rejected++;
        }
    }
    return c.done(std::to_string(corpus.size()) + " states round-tripped; 100000 fuzzed inputs (" +
                  std::to_string(parsed) + " parsed, " + std::to_string(rejected) + " rejected)");
}

Outcome bloch_reduction() {
    Check c;
    std::mt19937_64 rng(10);
    for (int t = 0; t < 500; t++) {
        auto a = haar(1, rng);
        auto s = tensor_product(a, haar(1, rng));
        auto rho = oracle::reduced_single(amps_of(s), 0);
        // rho = (1 + r.sigma)/2
        const double x = 2 * rho[0][1].real();
        const double y = -2 * rho[0][1].imag();
        const double z = (rho[0][0] - rho[1][1]).real();
        auto bc = base_coordinates(s);
        c.near(bc.comps[0], x, 1e-12, "x");
        c.near(bc.comps[1], y, 1e-12, "y");
        c.near(bc.delta, z, 1e-12, "z");
    }
    return c.done("500 products; (comps[0], comps[1], delta) is the Bloch vector of A");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"reference table", reference_table},
        {"three-qubit fibration equals 4 det rho_A", three_qubit_equivalence},
        {"two-qubit measure equals concurrence squared", concurrence_link},
        {"base sphere and norm defect", base_sphere},
        {"entanglement sensitivity", sensitivity},
        {"division-algebra boundary", division_boundary},
        {"tangle classification", tangles},
        {"ball map", ball_map},
        {"parser round trip and fuzzing", parser},
        {"Bloch reduction", bloch_reduction},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); k++) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("unexpected exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), secs);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
