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

#include <filesystem>
#include <string>
#include <string_view>

#include "hopfq/qubit_state.hpp"

namespace hopfq {

// State file format: {"n": <int>, "amplitudes": [[re, im], ...]} with 2^n
// entries in basis-index order. Numbers are written in shortest round-trip
// form, so save/load reproduces every amplitude bit for bit.

std::string state_to_json(const QubitState &state);

/// Throws StateError on malformed documents (plus the make_state errors).
QubitState state_from_json(std::string_view text, bool normalize = false);

void write_state_file(const std::filesystem::path &path, const QubitState &state);
QubitState read_state_file(const std::filesystem::path &path, bool normalize = false);

}  // namespace hopfq
