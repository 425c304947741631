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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/fibration.hpp"
#include "hopfq/qubit_state.hpp"
#include "hopfq/tangle.hpp"

namespace hopfq {

/// Everything known about one state, for the qubit moved into role A.
struct EntanglementReport {
    int n = 0;
    /// Original index of the qubit analyzed as A.
    std::size_t qubit = 0;
    /// Amplitudes after moving `qubit` to the front.
    std::vector<Amplitude> amplitudes;
    BaseCoordinates coordinates;
    /// Clamped measures (see e_measure); for n = 1 derived the same way.
    EMeasure measure;
    std::optional<HopfQuotient> quotient;        // n >= 2
    std::vector<double> tau_one_rest;            // per qubit, n >= 2
    std::vector<bool> separable;                 // per qubit, n >= 2
    std::optional<double> concurrence;           // n = 2
    std::optional<Amplitude> hyperdeterminant;   // n = 3
    std::optional<double> three_tangle;          // n = 3
    std::optional<std::array<double, 3>> two_tangles;  // n = 3
    std::optional<ThreeQubitClass> classification;     // n = 3
    std::optional<BallPoint> ball;               // n = 4
    std::optional<bool> mes;                     // n = 4
    std::optional<EMeasure> as_printed_measure;  // n = 4, EncodingVariant::as_printed
};

/// Throws NumericError if any reported quantity is not finite.
EntanglementReport analyze(const QubitState &state, std::size_t qubit = 0);

std::string report_to_json(const EntanglementReport &report);
/// Two columns, `field,value`; array entries as field[k].
std::string report_to_csv(const EntanglementReport &report);

inline constexpr double kPaperMatchTolerance = 1e-3;

enum class ClaimKind {
    /// |computed - paper_value| < tolerance
    equals,
    /// computed > tolerance
    nonzero,
    /// |computed - oracle_tau| < tolerance
    equals_oracle,
};

/// One checked claim of the reference results.
struct ConformanceRow {
    std::string label;
    std::string quantity;
    ClaimKind kind = ClaimKind::equals;
    /// NaN when the claim has no numeric value.
    double paper_value = 0;
    double computed_e_complement = 0;
    double computed_e_sum = 0;
    double oracle_tau = 0;
    /// The value the claim is about.
    double computed = 0;
    bool match = false;
    std::string note;
};

bool row_matches(const ConformanceRow &row);

/// Built-in reference states and claims, evaluated fresh on each call.
std::vector<ConformanceRow> verify_paper();

std::string conformance_to_text(const std::vector<ConformanceRow> &rows);
std::string conformance_to_json(const std::vector<ConformanceRow> &rows);
std::string conformance_to_csv(const std::vector<ConformanceRow> &rows);

/// The named reference states used by verify_paper.
struct NamedState {
    std::string label;
    std::string expression;
};
std::vector<NamedState> reference_states();

struct SampleRow {
    std::uint64_t index = 0;
    /// Unclamped, so e_complement - e_sum == norm_defect.
    double e_complement = 0;
    double e_sum = 0;
    double norm_defect = 0;
    std::optional<double> tau_a;        // n >= 2
    std::optional<double> ball_radius;  // n = 4
};

/// Sample i is random_state(n, seed, i); rows come back in index order
/// regardless of how many worker threads are used (0 = hardware count).
std::vector<SampleRow> sample(int n, std::uint64_t count, std::uint64_t seed, unsigned threads = 0);
std::string sample_to_csv(const std::vector<SampleRow> &rows);

/// Shortest round-trip decimal form of v.
std::string format_double(double v);

}  // namespace hopfq
