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
#include "fockline/io.hpp"

#include <fstream>
#include <sstream>

#include "fockline/errors.hpp"

namespace fockline::io {

namespace {

template <class F> auto field(const Json &j, const char *name, F &&convert) {
    if (!j.is_object() || !j.contains(name)) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    try {
        return convert(j.at(name));
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("field '") + name + "': " + e.what());
    }
}

Json complex_to_json(Amplitude z) { return Json::array({z.real(), z.imag()}); }

Amplitude complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ParseError("complex number must be a number or [re, im]");
}

} // namespace

Json mode_to_json(const ModeKey &key) {
    return Json{{"path", key.path}, {"pol", std::string(to_string(key.pol))}};
}

ModeKey mode_from_json(const Json &j) {
    auto path = field(j, "path", [](const Json &x) { return x.get<std::string>(); });
    auto pol = j.contains("pol") ? polarization_from_string(j["pol"].get<std::string>())
                                 : Polarization::None;
    return {std::move(path), pol};
}

Json registry_to_json(const ModeRegistry &registry) {
    Json modes = Json::array();
    for (const auto &k : registry.keys()) {
        modes.push_back(mode_to_json(k));
    }
    return modes;
}

RegistryPtr registry_from_json(const Json &j) {
    if (!j.is_array()) {
        throw ParseError("mode table must be an array");
    }
    std::vector<ModeKey> keys;
    for (const auto &m : j) {
        keys.push_back(mode_from_json(m));
    }
    return ModeRegistry::make(std::move(keys));
}

Json state_to_json(const StateVector &state) {
    Json terms = Json::array();
    for (const auto &[occ, amp] : state.terms()) {
        terms.push_back(
            Json{{"occupation", occ.counts()}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return Json{{"modes", registry_to_json(state.registry())}, {"terms", terms}};
}

StateVector state_from_json(const Json &j) {
    auto registry = field(j, "modes", [](const Json &x) { return registry_from_json(x); });
    StateVector::Terms terms;
    for (const auto &t : field(j, "terms", [](const Json &x) { return x; })) {
        auto counts = field(t, "occupation",
                            [](const Json &x) { return x.get<std::vector<unsigned>>(); });
        const double re = field(t, "re", [](const Json &x) { return x.get<double>(); });
        const double im = field(t, "im", [](const Json &x) { return x.get<double>(); });
        terms[OccupationVector(std::move(counts))] += Amplitude{re, im};
    }
    return {std::move(registry), std::move(terms)};
}

Json element_to_json(const ElementSpec &spec) {
    Json j{{"kind", std::string(kind_name(spec))}};
    if (const auto *e = std::get_if<PhaseShifter>(&spec)) {
        j["mode"] = mode_to_json(e->mode);
        j["phi"] = e->phi;
    } else if (const auto *e = std::get_if<BeamSplitterSymmetric>(&spec)) {
        j["modes"] = Json::array({mode_to_json(e->m1), mode_to_json(e->m2)});
    } else if (const auto *e = std::get_if<HalfWavePlate>(&spec)) {
        j["path"] = e->path;
        j["variant"] = std::string(to_string(e->variant));
    } else if (const auto *e = std::get_if<PolarizingBS>(&spec)) {
        j["in"] = Json::array({e->in1, e->in2});
        j["out"] = Json::array({e->out1, e->out2});
    } else if (const auto *e = std::get_if<GeneralTwoMode>(&spec)) {
        j["modes"] = Json::array({mode_to_json(e->m1), mode_to_json(e->m2)});
        const auto &u = e->u.matrix();
        j["u"] = Json::array(
            {Json::array({complex_to_json(u(0, 0)), complex_to_json(u(0, 1))}),
             Json::array({complex_to_json(u(1, 0)), complex_to_json(u(1, 1))})});
    }
    return j;
}

ElementSpec element_from_json(const Json &j) {
    const auto kind = field(j, "kind", [](const Json &x) { return x.get<std::string>(); });
    auto two_modes = [&]() {
        const auto modes = field(j, "modes", [](const Json &x) { return x; });
        if (!modes.is_array() || modes.size() != 2) {
            throw ParseError("element '" + kind + "' needs two modes");
        }
        return std::pair{mode_from_json(modes[0]), mode_from_json(modes[1])};
    };
    auto two_paths = [&](const char *name) {
        const auto p = field(j, name, [](const Json &x) {
            return x.get<std::vector<std::string>>();
        });
        if (p.size() != 2) {
            throw ParseError(std::string("field '") + name + "' needs two paths");
        }
        return p;
    };
    if (kind == "phase") {
        return PhaseShifter{field(j, "mode", [](const Json &x) { return mode_from_json(x); }),
                            field(j, "phi", [](const Json &x) { return x.get<double>(); })};
    }
    if (kind == "bs") {
        auto [a, b] = two_modes();
        return BeamSplitterSymmetric{a, b};
    }
    if (kind == "hwp") {
        const auto variant =
            field(j, "variant", [](const Json &x) { return x.get<std::string>(); });
        if (variant != "HWP45" && variant != "HWP90") {
            throw ParseError("unknown half-wave plate '" + variant + "'");
        }
        return HalfWavePlate{
            field(j, "path", [](const Json &x) { return x.get<std::string>(); }),
            variant == "HWP45" ? HwpVariant::HWP45 : HwpVariant::HWP90};
    }
    if (kind == "pbs") {
        const auto in = two_paths("in");
        const auto out = two_paths("out");
        return PolarizingBS{in[0], in[1], out[0], out[1]};
    }
    if (kind == "two_mode") {
        auto [a, b] = two_modes();
        const auto u = field(j, "u", [](const Json &x) { return x; });
        if (!u.is_array() || u.size() != 2 || u[0].size() != 2 || u[1].size() != 2) {
            throw ParseError("field 'u' must be a 2x2 matrix");
        }
        Eigen::Matrix2cd m;
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                m(r, c) = complex_from_json(u[static_cast<std::size_t>(r)]
                                             [static_cast<std::size_t>(c)]);
            }
        }
        return GeneralTwoMode{a, b, TwoModeUnitary(m)};
    }
    throw ParseError("unknown element kind '" + kind + "'");
}

Json pattern_to_json(const DetectionPattern &pattern) {
    Json out = Json::array();
    for (const auto &[key, n] : pattern) {
        Json m = mode_to_json(key);
        m["count"] = n;
        out.push_back(std::move(m));
    }
    return out;
}

DetectionPattern pattern_from_json(const Json &j) {
    if (!j.is_array()) {
        throw ParseError("detection pattern must be an array");
    }
    DetectionPattern p;
    for (const auto &m : j) {
        p[mode_from_json(m)] =
            field(m, "count", [](const Json &x) { return x.get<unsigned>(); });
    }
    return p;
}

Json branch_to_json(const Branch &branch) {
    return Json{{"pattern", pattern_to_json(branch.pattern)},
                {"probability", branch.probability},
                {"raw_amplitude_norm", branch.raw_amplitude_norm},
                {"conditional_state", state_to_json(branch.conditional_state)}};
}

Json circuit_to_json(const CircuitFile &circuit) {
    Json elements = Json::array();
    for (const auto &e : circuit.elements) {
        elements.push_back(element_to_json(e));
    }
    Json detect = Json::array();
    for (const auto &k : circuit.detect) {
        detect.push_back(mode_to_json(k));
    }
    return Json{{"input", state_to_json(circuit.input)},
                {"elements", elements},
                {"detect", detect}};
}

CircuitFile circuit_from_json(const Json &j) {
    CircuitFile c;
    c.input = field(j, "input", [](const Json &x) { return state_from_json(x); });
    for (const auto &e : field(j, "elements", [](const Json &x) { return x; })) {
        c.elements.push_back(element_from_json(e));
    }
    if (j.contains("detect")) {
        for (const auto &k : j["detect"]) {
            c.detect.push_back(mode_from_json(k));
        }
    }
    return c;
}

Json parse(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        // e.byte is the 1-based offset of the offending character.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1,
                                                       text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("; "); pos != std::string::npos) {
            what = what.substr(pos + 2);
        }
        throw ParseError(what, line, column);
    }
}

Json parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace fockline::io
