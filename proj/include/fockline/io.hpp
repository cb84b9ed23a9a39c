// Copyright 2026 The fockline Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Structured-text (JSON) forms of registries, states, optical elements,
 * detection branches and circuit files.
 *
 * Doubles are written in shortest round-trip form, so re-reading a
 * serialized state reproduces every amplitude bit for bit.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fockline/detection.hpp"
#include "fockline/elements.hpp"
#include "fockline/state.hpp"

namespace fockline::io {

using Json = nlohmann::ordered_json;

Json mode_to_json(const ModeKey &key);
ModeKey mode_from_json(const Json &j);

Json registry_to_json(const ModeRegistry &registry);
RegistryPtr registry_from_json(const Json &j);

/// {"modes": [...], "terms": [{"occupation": [...], "re": x, "im": y}, ...]}
Json state_to_json(const StateVector &state);
StateVector state_from_json(const Json &j);

Json element_to_json(const ElementSpec &spec);
ElementSpec element_from_json(const Json &j);

Json pattern_to_json(const DetectionPattern &pattern);
DetectionPattern pattern_from_json(const Json &j);

Json branch_to_json(const Branch &branch);

/// An input state, an ordered element list and the modes read out at the
/// end.
struct CircuitFile {
    StateVector input;
    std::vector<ElementSpec> elements;
    std::vector<ModeKey> detect;
};

Json circuit_to_json(const CircuitFile &circuit);
CircuitFile circuit_from_json(const Json &j);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse(std::string_view text);
/// Reads and parses a file.
Json parse_file(const std::string &path);
/// Two-space indented text with a trailing newline.
std::string dump(const Json &j);

} // namespace fockline::io
