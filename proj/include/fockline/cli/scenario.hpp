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
 * Scenario files:
 *
 *     {"circuit": "filter" | "projector" | "ghz" | "custom",
 *      "parameters": {"alpha": .., "beta": .., "gamma": ..,
 *                     "c0": .., "c1": .., "c2": .., "c3": .., "n": ..},
 *      "heralds": "feedforward" | "strict",
 *      "emit_checkpoints": bool,
 *      "network": <circuit file, custom only>}
 *
 * Complex parameters are a number, [re, im] or a "re+imi" string.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fockline/circuits.hpp"
#include "fockline/io.hpp"

namespace fockline::cli {

enum class CircuitKind { Filter, Projector, Ghz, Custom };

std::string_view to_string(CircuitKind kind);

struct Scenario {
    CircuitKind circuit{CircuitKind::Filter};
    std::map<std::string, Amplitude> parameters;
    circuits::HeraldPolicy heralds{circuits::HeraldPolicy::FeedForward};
    bool emit_checkpoints{false};
    std::optional<io::CircuitFile> network;

    /// Parameter value; zero when absent.
    [[nodiscard]] Amplitude parameter(const std::string &name) const;
};

/// Throws ParseError (with line and column for syntax errors).
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string &path);
io::Json scenario_to_json(const Scenario &scenario);

} // namespace fockline::cli
