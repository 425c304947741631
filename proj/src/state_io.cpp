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

#include "hopfq/state_io.hpp"

#include <fstream>
#include <sstream>

#include "hopfq/errors.hpp"
#include "json.hpp"

namespace hopfq {

std::string state_to_json(const QubitState &state) {
    nlohmann::json doc;
    doc["n"] = state.num_qubits();
    auto amps = nlohmann::json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    doc["amplitudes"] = std::move(amps);
    return doc.dump() + "\n";
}

QubitState state_from_json(std::string_view text, bool normalize) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw StateError(std::string("malformed state file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("amplitudes") ||
        !doc["amplitudes"].is_array()) {
        throw StateError("state file needs an integer \"n\" and an \"amplitudes\" array");
    }
    std::vector<Amplitude> amps;
    for (const auto &entry : doc["amplitudes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            throw StateError("each amplitude must be a [re, im] pair of numbers");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return make_state(doc["n"].get<int>(), amps, normalize);
}

void write_state_file(const std::filesystem::path &path, const QubitState &state) {
    std::ofstream out(path);
    if (!out) {
        throw StateError("cannot open " + path.string() + " for writing");
    }
    out << state_to_json(state);
}

QubitState read_state_file(const std::filesystem::path &path, bool normalize) {
    std::ifstream in(path);
    if (!in) {
        throw StateError("cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return state_from_json(buf.str(), normalize);
}

}  // namespace hopfq
