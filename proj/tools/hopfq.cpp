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

// Command-line front end for the hopfq library.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hopfq/braket.hpp"
#include "hopfq/cayley_dickson.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/report.hpp"
#include "hopfq/state_io.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kParseFailure = 1,
    kInvalidInput = 2,
    kNumericFailure = 3,
    kStrictMismatch = 4,
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// `source` names an existing file or is itself a bra-ket expression.
hopfq::QubitState load_state(const std::string &source, bool normalize) {
    std::error_code ec;
    if (!source.empty() && std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            return hopfq::state_from_json(text, normalize);
        }
        return hopfq::parse_state(text, normalize);
    }
    return hopfq::parse_state(source, normalize);
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + out_path + " for writing");
    }
    out << text;
    if (!out.flush()) {
        throw IoError("cannot write " + out_path);
    }
}

std::string zero_divisor_listing() {
    std::string out;
    for (int level = 1; level <= hopfq::kMaxLevel; level++) {
        auto pairs = hopfq::find_basis_zero_divisors(level);
        out += "level " + std::to_string(level) + " (dim " + std::to_string(1 << level) + "): ";
        if (pairs.empty()) {
            out += "none\n";
            continue;
        }
        out += std::to_string(pairs.size()) + " basis pairs\n";
        for (const auto &p : pairs) {
            out += "  " + p.str() + "\n";
        }
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hopf-fibration entanglement measures for 1-4 qubits"};
    app.require_subcommand(1);

    std::string state_source;
    bool normalize = false;
    std::size_t qubit = 0;
    std::string format;
    std::string out_path;
    bool strict = false;
    int qubits = 0;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool table = false;

    auto *analyze = app.add_subcommand("analyze", "Entanglement report for one state");
    analyze->add_option("--state", state_source, "Bra-ket expression or path to a state file")->required();
    analyze->add_flag("--normalize", normalize, "Rescale the state to unit norm");
    analyze->add_option("--qubit", qubit, "Qubit treated as A");
    analyze->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--out", out_path, "Write to a file instead of standard output");

    auto *verify = app.add_subcommand("verify-paper", "Reference table with discrepancy accounting");
    verify->add_flag("--strict", strict, "Exit 4 if any row mismatches");
    verify->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", out_path, "Write to a file instead of standard output");

    auto *sample = app.add_subcommand("sample", "CSV of measures over random states");
    sample->add_option("-n,--qubits", qubits, "Number of qubits (1-4)")->required()->check(CLI::Range(1, 4));
    sample->add_option("--count", count, "Number of states")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "Random seed");
    sample->add_option("--threads", threads, "Worker threads (0 = hardware)");
    sample->add_option("--out", out_path, "Write to a file instead of standard output");

    auto *zd = app.add_subcommand("zero-divisors", "Basis zero divisors per Cayley-Dickson level");
    zd->add_flag("--table", table, "Print the level-4 basis product table as CSV instead");
    zd->add_option("--out", out_path, "Write to a file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*analyze) {
            auto report = hopfq::analyze(load_state(state_source, normalize), qubit);
            emit(format == "csv" ? hopfq::report_to_csv(report) : hopfq::report_to_json(report), out_path);
            return kOk;
        }
        if (*verify) {
            auto rows = hopfq::verify_paper();
            if (format == "json") {
                emit(hopfq::conformance_to_json(rows), out_path);
            } else if (format == "csv") {
                emit(hopfq::conformance_to_csv(rows), out_path);
            } else {
                emit(hopfq::conformance_to_text(rows), out_path);
            }
            if (strict) {
                for (const auto &r : rows) {
                    if (!r.match) {
                        return kStrictMismatch;
                    }
                }
            }
            return kOk;
        }
        if (*sample) {
            emit(hopfq::sample_to_csv(hopfq::sample(qubits, count, seed, threads)), out_path);
            return kOk;
        }
        if (*zd) {
            emit(table ? hopfq::basis_product_table_csv(hopfq::kMaxLevel) : zero_divisor_listing(), out_path);
            return kOk;
        }
    } catch (const hopfq::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const hopfq::NumericError &e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const hopfq::SingularElementError &e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const hopfq::StateError &e) {
        std::cerr << "invalid state: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const hopfq::ContractError &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const IoError &e) {
        std::cerr << e.what() << "\n";
        return kInvalidInput;
    }
    return kOk;
}
