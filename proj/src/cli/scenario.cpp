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
#include "fockline/cli/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fockline/cli/complex_parse.hpp"
#include "fockline/errors.hpp"

namespace fockline::cli {

namespace {

const std::set<std::string> kKnownParameters{"alpha", "beta", "gamma", "c0",
                                             "c1",    "c2",   "c3",    "n"};

Amplitude parameter_value(const std::string &name, const io::Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_string()) {
        return parse_complex(j.get<std::string>());
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ParseError("parameter '" + name + "' must be a number, [re, im] or a string");
}

} // namespace

std::string_view to_string(CircuitKind kind) {
    switch (kind) {
    case CircuitKind::Filter:
        return "filter";
    case CircuitKind::Projector:
        return "projector";
    case CircuitKind::Ghz:
        return "ghz";
    case CircuitKind::Custom:
        break;
    }
    return "custom";
}

Amplitude Scenario::parameter(const std::string &name) const {
    if (auto it = parameters.find(name); it != parameters.end()) {
        return it->second;
    }
    return {};
}

Scenario parse_scenario(std::string_view text) {
    const io::Json j = io::parse(text);
    if (!j.is_object()) {
        throw ParseError("scenario must be an object", 1, 1);
    }
    Scenario s;
    if (!j.contains("circuit") || !j["circuit"].is_string()) {
        throw ParseError("scenario needs a 'circuit' string");
    }
    const auto kind = j["circuit"].get<std::string>();
    if (kind == "filter") {
        s.circuit = CircuitKind::Filter;
    } else if (kind == "projector") {
        s.circuit = CircuitKind::Projector;
    } else if (kind == "ghz") {
        s.circuit = CircuitKind::Ghz;
    } else if (kind == "custom") {
        s.circuit = CircuitKind::Custom;
    } else {
        throw ParseError("unknown circuit '" + kind + "'");
    }
    if (j.contains("parameters")) {
        if (!j["parameters"].is_object()) {
            throw ParseError("'parameters' must be an object");
        }
        for (const auto &[name, value] : j["parameters"].items()) {
            if (!kKnownParameters.contains(name)) {
                throw ParseError("unknown parameter '" + name + "'");
            }
            s.parameters[name] = parameter_value(name, value);
        }
    }
    if (j.contains("heralds")) {
        try {
            s.heralds = circuits::herald_policy_from_string(j["heralds"].get<std::string>());
        } catch (const std::exception &e) {
            throw ParseError(std::string("'heralds': ") + e.what());
        }
    }
    if (j.contains("emit_checkpoints")) {
        if (!j["emit_checkpoints"].is_boolean()) {
            throw ParseError("'emit_checkpoints' must be a boolean");
        }
        s.emit_checkpoints = j["emit_checkpoints"].get<bool>();
    }
    if (s.circuit == CircuitKind::Custom) {
        if (!j.contains("network")) {
            throw ParseError("custom scenario needs a 'network'");
        }
        try {
            s.network = io::circuit_from_json(j["network"]);
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(std::string("'network': ") + e.what());
        }
    }
    return s;
}

Scenario load_scenario(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open scenario '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

io::Json scenario_to_json(const Scenario &scenario) {
    io::Json params = io::Json::object();
    for (const auto &[name, value] : scenario.parameters) {
        params[name] = io::Json::array({value.real(), value.imag()});
    }
    io::Json j{{"circuit", std::string(to_string(scenario.circuit))},
               {"parameters", params},
               {"heralds", std::string(circuits::to_string(scenario.heralds))},
               {"emit_checkpoints", scenario.emit_checkpoints}};
    if (scenario.network) {
        j["network"] = io::circuit_to_json(*scenario.network);
    }
    return j;
}

} // namespace fockline::cli
