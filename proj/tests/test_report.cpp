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

#include "hopfq/report.hpp"

#include <charconv>

#include "gtest/gtest.h"

#include "hopfq/braket.hpp"
#include "hopfq/errors.hpp"
#include "json.hpp"

using namespace hopfq;

TEST(report, fields_project_module_outputs) {
    for (int n = 1; n <= 4; n++) {
        auto s = random_state(n, 17);
        auto r = analyze(s);
        ASSERT_EQ(r.n, n);
        ASSERT_EQ(r.amplitudes.size(), s.dim());
        auto bc = base_coordinates(s);
        ASSERT_EQ(r.coordinates.comps, bc.comps);
        ASSERT_EQ(r.coordinates.delta, bc.delta);
        ASSERT_EQ(r.concurrence.has_value(), n == 2);
        ASSERT_EQ(r.three_tangle.has_value(), n == 3);
        ASSERT_EQ(r.ball.has_value(), n == 4);
        if (n >= 2) {
            ASSERT_EQ(r.measure.e_complement, e_measure(s).e_complement);
            ASSERT_EQ(r.tau_one_rest.size(), static_cast<std::size_t>(n));
            for (std::size_t q = 0; q < r.tau_one_rest.size(); q++) {
                ASSERT_EQ(r.tau_one_rest[q], tau_one_rest(s, q));
                ASSERT_EQ(r.separable[q], separable_one_rest(s, q));
            }
        }
        if (n == 3) {
            ASSERT_EQ(*r.three_tangle, three_tangle(s));
            ASSERT_EQ(*r.classification, classify_three(s));
        }
        if (n == 4) {
            ASSERT_EQ(r.as_printed_measure->e_complement, e_measure(s, EncodingVariant::as_printed).e_complement);
        }
    }
}

TEST(report, qubit_choice_equals_permuted_state) {
    for (int n = 2; n <= 4; n++) {
        auto s = random_state(n, 23);
        for (std::size_t q = 0; q < static_cast<std::size_t>(n); q++) {
            auto direct = analyze(s, q);
            auto moved = analyze(permute_qubits(s, front_permutation(n, q)));
            moved.qubit = q;
            ASSERT_EQ(report_to_json(direct), report_to_json(moved));
            ASSERT_EQ(report_to_csv(direct), report_to_csv(moved));
        }
    }
    ASSERT_THROW(analyze(random_state(2, 1), 2), ContractError);
}

TEST(report, json_is_lossless) {
    auto s = random_state(4, 3);
    auto j = nlohmann::json::parse(report_to_json(analyze(s)));
    for (std::size_t k = 0; k < s.dim(); k++) {
        ASSERT_EQ(j["amplitudes"][k][0].get<double>(), s[k].real());
        ASSERT_EQ(j["amplitudes"][k][1].get<double>(), s[k].imag());
    }
    ASSERT_EQ(j["e_complement"].get<double>(), e_measure(s).e_complement);
    ASSERT_EQ(report_to_json(analyze(s)), report_to_json(analyze(s)));
}

TEST(report, ghz_report) {
    auto r = analyze(parse_state("(|0000>+|1111>)/sqrt(2)"));
    auto j = nlohmann::json::parse(report_to_json(r));
    ASSERT_NEAR(j["e_complement"].get<double>(), 1, 1e-12);
    ASSERT_EQ(j["mes"], true);
    ASSERT_NEAR(j["ball"]["radius_sq"].get<double>(), 0, 1e-24);

    auto csv = report_to_csv(analyze(parse_state("|01>")));
    ASSERT_EQ(csv.rfind("field,value\n", 0), 0u);
    ASSERT_NE(csv.find("\ne_complement,0\n"), std::string::npos);
    ASSERT_NE(csv.find("\nseparable[0],true\n"), std::string::npos);
}

TEST(report, format_double_round_trips) {
    for (double v : {0.1, 1.0 / 3, -2.5e-300, 6.02214076e23, 0.0}) {
        std::string s = format_double(v);
        double back = 0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        ASSERT_EQ(back, v) << s;
    }
}

TEST(conformance, rows) {
    auto rows = verify_paper();
    ASSERT_EQ(conformance_to_json(rows), conformance_to_json(verify_paper()));
    auto find = [&](const std::string &label, const std::string &quantity) {
        for (const auto &r : rows) {
            if (r.label == label && r.quantity == quantity) {
                return r;
            }
        }
        ADD_FAILURE() << "missing row " << label << " / " << quantity;
        return ConformanceRow{};
    };
    auto ghz = find("GHZ4", "E");
    ASSERT_NEAR(ghz.computed_e_complement, 1, 1e-12);
    ASSERT_TRUE(ghz.match);
    auto w1 = find("W1", "E");
    ASSERT_NEAR(w1.computed_e_complement, 0.75, 1e-12);
    ASSERT_TRUE(w1.match);

    // Reported values for the remaining rows are whatever the formulas give;
    // they must be present, flagged, and consistent with the stored fields.
    auto w0 = find("W0", "E");
    ASSERT_NEAR(w0.computed_e_complement, 0.75, 1e-12);
    ASSERT_EQ(w0.paper_value, 0.5);
    ASSERT_FALSE(w0.match);
    auto phi2 = find("Phi2 (printed prefactor)", "E");
    ASSERT_NE(phi2.note.find("unnormalized"), std::string::npos);
    find("Phi2 (unit-normalized)", "E");
    find("Phi1", "E");

    for (const auto &r : rows) {
        ASSERT_EQ(r.match, row_matches(r)) << r.label;
    }
    ASSERT_FALSE(find("complex 1(x)3 product (as-printed encoding)", "E").match);
    ASSERT_TRUE(find("complex 1(x)3 product (consistent encoding)", "E").match);
}

TEST(conformance, match_rule) {
    ConformanceRow r;
    r.paper_value = 0.5;
    r.computed = 0.5009;
    ASSERT_TRUE(row_matches(r));
    r.computed = 0.5011;
    ASSERT_FALSE(row_matches(r));
    r.kind = ClaimKind::nonzero;
    ASSERT_TRUE(row_matches(r));
    r.computed = 0;
    ASSERT_FALSE(row_matches(r));
    r.kind = ClaimKind::equals_oracle;
    r.oracle_tau = 0.0005;
    ASSERT_TRUE(row_matches(r));
}

TEST(conformance, serializations_agree) {
    auto rows = verify_paper();
    auto j = nlohmann::json::parse(conformance_to_json(rows));
    ASSERT_EQ(j.size(), rows.size());
    auto csv = conformance_to_csv(rows);
    ASSERT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rows.size() + 1);
    auto text = conformance_to_text(rows);
    ASSERT_NE(text.find("[MISMATCH] W0"), std::string::npos);
    ASSERT_NE(text.find("[match]    GHZ4"), std::string::npos);
}

TEST(sample, deterministic_across_thread_counts) {
    auto one = sample_to_csv(sample(4, 200, 42, 1));
    ASSERT_EQ(one, sample_to_csv(sample(4, 200, 42, 3)));
    ASSERT_EQ(one, sample_to_csv(sample(4, 200, 42, 0)));
    ASSERT_NE(one, sample_to_csv(sample(4, 200, 43, 1)));
    ASSERT_EQ(one.substr(0, one.find('\n')), "index,e_complement,e_sum,norm_defect,tau_a,ball_radius");
}

TEST(sample, columns) {
    for (const auto &row : sample(3, 300, 5)) {
        ASSERT_NEAR(row.e_complement, *row.tau_a, 1e-12);
        ASSERT_FALSE(row.ball_radius.has_value());
    }
    for (const auto &row : sample(4, 300, 5)) {
        ASSERT_NEAR(row.norm_defect, row.e_complement - row.e_sum, 1e-12);
        ASSERT_LE(*row.ball_radius, 1 + 1e-12);
    }
    for (const auto &row : sample(1, 10, 5)) {
        ASSERT_FALSE(row.tau_a.has_value());
    }
    ASSERT_THROW(sample(0, 1, 0), ContractError);
    ASSERT_THROW(sample(5, 1, 0), ContractError);
    ASSERT_THROW(sample(2, 0, 0), ContractError);
}
