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
#include "fockline/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "fockline/equivalence.hpp"
#include "fockline/errors.hpp"
#include "fockline/permanent_kernels.hpp"

namespace fockline::cli {

namespace {

using circuits::HeraldPolicy;
using io::Json;

constexpr double kNormTolerance = 1e-12;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

Json complex_json(Amplitude z) { return Json::array({z.real(), z.imag()}); }

Json checkpoints_json(const std::vector<circuits::Checkpoint> &cps,
                      const circuits::QubitAmplitudes *reference) {
    Json out = Json::array();
    for (const auto &cp : cps) {
        Json entry{{"name", cp.name}, {"state", io::state_to_json(cp.state)}};
        if (reference != nullptr) {
            entry["reference_fidelity"] = fidelity(
                cp.state,
                circuits::reference_checkpoint(cp.name, *reference, cp.state.registry_ptr()));
        }
        out.push_back(std::move(entry));
    }
    return out;
}

Json branches_json(const std::vector<Branch> &branches) {
    Json out = Json::array();
    for (const auto &b : branches) {
        out.push_back(io::branch_to_json(b));
    }
    return out;
}

Json normalization_warning(double norm_sq) {
    return Json{{"kind", "normalized"},
                {"message", "input was rescaled to unit norm"},
                {"input_norm_sq", norm_sq}};
}

double filter_expected(const circuits::FilterInput &in, HeraldPolicy heralds) {
    const double kept = std::norm(in.alpha()) + std::norm(in.gamma());
    return heralds == HeraldPolicy::Strict ? kept / 4.0 : kept / 2.0;
}

double projector_expected(const circuits::QubitAmplitudes &c, HeraldPolicy heralds) {
    const double kept = std::norm(c[0]) + std::norm(c[3]);
    return heralds == HeraldPolicy::Strict ? kept / 16.0 : kept / 4.0;
}

double ghz_expected(std::size_t n, HeraldPolicy heralds) {
    const double step = heralds == HeraldPolicy::Strict ? 1.0 / 32.0 : 1.0 / 8.0;
    return std::pow(step, static_cast<double>(n - 1));
}

/// Outcome of one circuit evaluation, shared by the single-run commands and
/// the sweep.
struct Evaluation {
    Json report;
    double success{0.0};
    double expected{0.0};
    bool degenerate{false};
    std::string summary;
};

Evaluation eval_filter(Amplitude a, Amplitude b, Amplitude g, HeraldPolicy heralds,
                       bool checkpoints) {
    Evaluation ev;
    Json warnings = Json::array();
    const double n2 = std::norm(a) + std::norm(b) + std::norm(g);
    if (!(n2 > 1e-24)) {
        ev.degenerate = true;
        ev.report = Json{{"warnings", warnings},
                         {"degenerate", true},
                         {"error", "filter input is zero"}};
        ev.summary = "degenerate: filter input is zero\n";
        return ev;
    }
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        warnings.push_back(normalization_warning(n2));
    }
    const auto input = circuits::FilterInput::normalized(a, b, g);
    const auto r = circuits::run_filter(input, heralds);
    ev.success = r.success_probability;
    ev.expected = filter_expected(input, heralds);
    ev.degenerate = r.degenerate;
    ev.report = Json{{"warnings", warnings},
                     {"normalized_input",
                      Json{{"alpha", complex_json(input.alpha())},
                           {"beta", complex_json(input.beta())},
                           {"gamma", complex_json(input.gamma())}}},
                     {"success_probability", r.success_probability},
                     {"expected_probability", ev.expected},
                     {"degenerate", r.degenerate},
                     {"target_fidelity", r.target_fidelity},
                     {"branches", branches_json(r.branches)},
                     {"output_state", io::state_to_json(r.corrected_output)}};
    if (checkpoints) {
        ev.report["checkpoints"] = Json::array(
            {Json{{"name", "pre_measurement"},
                  {"state", io::state_to_json(circuits::filter_circuit_state(input))}}});
    }
    std::ostringstream os;
    os << "filter (" << circuits::to_string(heralds) << ")\n";
    for (const auto &br : r.branches) {
        os << "  herald " << to_string(br.pattern) << "  p = " << fmt(br.probability) << '\n';
    }
    os << "  success_probability  " << fmt(r.success_probability) << '\n'
       << "  expected             " << fmt(ev.expected) << '\n'
       << "  target_fidelity      " << fmt(r.target_fidelity) << '\n';
    if (r.degenerate) {
        os << "  degenerate: no vacuum or two-photon component\n";
    }
    ev.summary = os.str();
    return ev;
}

Evaluation eval_projector(const std::vector<Amplitude> &c_in, HeraldPolicy heralds,
                          bool checkpoints) {
    if (c_in.size() != 4) {
        throw ArgumentError("projector needs exactly four amplitudes c0..c3");
    }
    Evaluation ev;
    Json warnings = Json::array();
    std::array<Amplitude, 4> c{c_in[0], c_in[1], c_in[2], c_in[3]};
    double n2 = 0.0;
    for (const auto &x : c) {
        n2 += std::norm(x);
    }
    if (!(n2 > 1e-24)) {
        ev.degenerate = true;
        ev.report = Json{{"warnings", warnings},
                         {"degenerate", true},
                         {"error", "qubit amplitudes are zero"}};
        ev.summary = "degenerate: qubit amplitudes are zero\n";
        return ev;
    }
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        warnings.push_back(normalization_warning(n2));
    }
    const auto input = circuits::QubitAmplitudes::normalized(c);
    const auto r = circuits::run_projector(input, {heralds, checkpoints});
    ev.success = r.success_probability;
    ev.expected = projector_expected(input, heralds);
    ev.degenerate = r.degenerate;

    double target_fid = 0.0;
    if (!r.degenerate) {
        target_fid = fidelity(r.output_state,
                              circuits::reference_checkpoint(
                                  "phi_out", input, r.output_state.registry_ptr()));
    }
    Json normalized = Json::array();
    for (const auto &x : input.c()) {
        normalized.push_back(complex_json(x));
    }
    ev.report = Json{{"warnings", warnings},
                     {"normalized_input", normalized},
                     {"success_probability", r.success_probability},
                     {"expected_probability", ev.expected},
                     {"degenerate", r.degenerate},
                     {"target_fidelity", target_fid},
                     {"branch_consistency", r.branch_consistency},
                     {"branches", branches_json(r.branches)},
                     {"output_state", io::state_to_json(r.output_state)}};
    if (checkpoints) {
        ev.report["checkpoints"] = checkpoints_json(r.checkpoints, &input);
    }
    std::ostringstream os;
    os << "projector (" << circuits::to_string(heralds) << ")\n"
       << "  herald branches      " << r.branches.size() << '\n'
       << "  success_probability  " << fmt(r.success_probability) << '\n'
       << "  expected             " << fmt(ev.expected) << '\n'
       << "  target_fidelity      " << fmt(target_fid) << '\n';
    if (checkpoints) {
        for (const auto &cp : ev.report["checkpoints"]) {
            os << "  " << cp["name"].get<std::string>() << "  fidelity "
               << fmt(cp["reference_fidelity"].get<double>()) << '\n';
        }
    }
    if (r.degenerate) {
        os << "  degenerate: input has no |HH> or |VV> component\n";
    }
    ev.summary = os.str();
    return ev;
}

Evaluation eval_ghz(std::size_t n, HeraldPolicy heralds, bool checkpoints) {
    Evaluation ev;
    // Step by step so the intermediate states can be reported.
    if (n < 2) {
        throw ArgumentError("GHZ chain needs n >= 2");
    }
    std::vector<double> steps;
    Json cps = Json::array();
    StateVector state = circuits::ghz_state(1);
    double cumulative = 1.0;
    double fid = 0.0;
    for (std::size_t k = 2; k <= n; ++k) {
        const auto step = circuits::run_ghz_step(state, heralds);
        state = step.state;
        steps.push_back(step.cumulative_probability);
        cumulative *= step.cumulative_probability;
        fid = step.target_fidelity;
        if (checkpoints) {
            cps.push_back(Json{{"name", "ghz" + std::to_string(k)},
                               {"step_probability", step.cumulative_probability},
                               {"target_fidelity", step.target_fidelity},
                               {"state", io::state_to_json(state)}});
        }
    }
    ev.success = cumulative;
    ev.expected = ghz_expected(n, heralds);
    ev.report = Json{{"n", n},
                     {"step_probabilities", steps},
                     {"success_probability", cumulative},
                     {"cumulative_probability", cumulative},
                     {"expected_probability", ev.expected},
                     {"degenerate", false},
                     {"target_fidelity", fid},
                     {"output_state", io::state_to_json(state)}};
    if (checkpoints) {
        ev.report["checkpoints"] = cps;
    }
    std::ostringstream os;
    os << "ghz n=" << n << " (" << circuits::to_string(heralds) << ")\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        os << "  step " << i + 2 << "  p = " << fmt(steps[i]) << '\n';
    }
    os << "  cumulative_probability  " << fmt(cumulative) << '\n'
       << "  expected                " << fmt(ev.expected) << '\n'
       << "  target_fidelity         " << fmt(fid) << '\n';
    ev.summary = os.str();
    return ev;
}

Evaluation eval_custom(const io::CircuitFile &network, bool checkpoints) {
    Evaluation ev;
    StateVector state = network.input;
    Json cps = Json::array();
    for (std::size_t i = 0; i < network.elements.size(); ++i) {
        state = apply_element(state, network.elements[i]);
        if (checkpoints) {
            cps.push_back(Json{{"name", "after_" + std::to_string(i)},
                               {"element", io::element_to_json(network.elements[i])},
                               {"state", io::state_to_json(state)}});
        }
    }
    const auto branches = outcome_distribution(state, network.detect);
    double total = 0.0;
    for (const auto &b : branches) {
        total += b.probability;
    }
    ev.success = total;
    ev.expected = network.input.norm_sq();
    ev.report = Json{{"success_probability", total},
                     {"expected_probability", ev.expected},
                     {"degenerate", false},
                     {"branches", branches_json(branches)},
                     {"output_state", io::state_to_json(state)}};
    if (checkpoints) {
        ev.report["checkpoints"] = cps;
    }
    std::ostringstream os;
    os << "custom network, " << network.elements.size() << " elements\n";
    for (const auto &b : branches) {
        os << "  outcome " << to_string(b.pattern) << "  p = " << fmt(b.probability) << '\n';
    }
    ev.summary = os.str();
    return ev;
}

Evaluation evaluate(const Scenario &s, bool checkpoints) {
    switch (s.circuit) {
    case CircuitKind::Filter:
        return eval_filter(s.parameter("alpha"), s.parameter("beta"), s.parameter("gamma"),
                           s.heralds, checkpoints);
    case CircuitKind::Projector:
        return eval_projector({s.parameter("c0"), s.parameter("c1"), s.parameter("c2"),
                               s.parameter("c3")},
                              s.heralds, checkpoints);
    case CircuitKind::Ghz: {
        const double n = s.parameter("n").real();
        if (!(n >= 2.0) || n != std::floor(n)) {
            throw ArgumentError("ghz scenario needs an integer parameter n >= 2");
        }
        return eval_ghz(static_cast<std::size_t>(n), s.heralds, checkpoints);
    }
    case CircuitKind::Custom:
        if (!s.network) {
            throw ArgumentError("custom scenario without a network");
        }
        return eval_custom(*s.network, checkpoints);
    }
    throw ArgumentError("unknown circuit kind");
}

RunReport finish(const char *command, Json scenario, Evaluation ev) {
    RunReport r;
    r.json = Json{{"command", command}, {"scenario", std::move(scenario)}};
    for (auto &[key, value] : ev.report.items()) {
        r.json[key] = value;
    }
    r.summary = std::move(ev.summary);
    r.exit_code = ev.degenerate ? kExitDegenerate : kExitOk;
    return r;
}

Scenario filter_scenario(Amplitude a, Amplitude b, Amplitude g, HeraldPolicy heralds) {
    Scenario s;
    s.circuit = CircuitKind::Filter;
    s.parameters = {{"alpha", a}, {"beta", b}, {"gamma", g}};
    s.heralds = heralds;
    return s;
}

} // namespace

RunReport cmd_filter(Amplitude alpha, Amplitude beta, Amplitude gamma,
                     HeraldPolicy heralds) {
    const auto s = filter_scenario(alpha, beta, gamma, heralds);
    return finish("filter", scenario_to_json(s), evaluate(s, false));
}

RunReport cmd_project(const std::vector<Amplitude> &c, HeraldPolicy heralds,
                      bool checkpoints) {
    if (c.size() != 4) {
        throw ArgumentError("projector needs exactly four amplitudes c0..c3");
    }
    Scenario s;
    s.circuit = CircuitKind::Projector;
    s.parameters = {{"c0", c[0]}, {"c1", c[1]}, {"c2", c[2]}, {"c3", c[3]}};
    s.heralds = heralds;
    s.emit_checkpoints = checkpoints;
    return finish("project", scenario_to_json(s), evaluate(s, checkpoints));
}

RunReport cmd_ghz(std::size_t n, HeraldPolicy heralds) {
    Scenario s;
    s.circuit = CircuitKind::Ghz;
    s.parameters = {{"n", Amplitude(static_cast<double>(n), 0.0)}};
    s.heralds = heralds;
    return finish("ghz", scenario_to_json(s), evaluate(s, false));
}

RunReport run_scenario(const Scenario &scenario, bool force_checkpoints) {
    const bool cps = force_checkpoints || scenario.emit_checkpoints;
    return finish("run", scenario_to_json(scenario), evaluate(scenario, cps));
}

RunReport cmd_trace(const Scenario &scenario) {
    auto r = run_scenario(scenario, true);
    r.json["command"] = "trace";
    return r;
}

RunReport cmd_verify(std::uint64_t seed, std::size_t trials, std::size_t threads) {
    const auto results = oracle::run_equivalence_suite(seed, trials, threads);
    std::size_t matched = 0;
    double max_err = 0.0;
    double max_drift = 0.0;
    double max_complete = 0.0;
    bool conserved = true;
    Json records = Json::array();
    for (const auto &t : results) {
        matched += t.matched() ? 1 : 0;
        max_err = std::max(max_err, t.max_amplitude_error);
        max_drift = std::max(max_drift, t.max_norm_drift);
        max_complete = std::max(max_complete, t.completeness_error);
        conserved = conserved && t.photon_number_conserved;
        records.push_back(Json{{"index", t.index},
                               {"modes", t.modes},
                               {"photons", t.photons},
                               {"elements", t.elements},
                               {"max_amplitude_error", t.max_amplitude_error},
                               {"max_norm_drift", t.max_norm_drift},
                               {"completeness_error", t.completeness_error},
                               {"photon_number_conserved", t.photon_number_conserved},
                               {"matched", t.matched()}});
    }
    const std::string line =
        std::to_string(matched) + "/" + std::to_string(trials) + " matched";
    RunReport r;
    r.json = Json{{"command", "verify"},
                  {"seed", seed},
                  {"trials", trials},
                  {"tolerance", oracle::kAmplitudeTolerance},
                  {"kernel", std::string(kernels::to_string(kernels::preferred_isa()))},
                  {"result", line},
                  {"matched", matched},
                  {"max_amplitude_error", max_err},
                  {"max_norm_drift", max_drift},
                  {"max_completeness_error", max_complete},
                  {"photon_number_conserved", conserved},
                  {"records", records}};
    std::ostringstream os;
    os << "verify seed=" << seed << " trials=" << trials << '\n'
       << "  " << line << '\n'
       << "  max_amplitude_error     " << fmt(max_err) << '\n'
       << "  max_norm_drift          " << fmt(max_drift) << '\n'
       << "  max_completeness_error  " << fmt(max_complete) << '\n'
       << "  photon_number_conserved " << (conserved ? "yes" : "no") << '\n';
    r.summary = os.str();
    r.exit_code = (matched == trials && conserved) ? kExitOk : kExitMismatch;
    return r;
}

double GridAxis::value(std::size_t i) const {
    if (count <= 1) {
        return start;
    }
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

GridAxis parse_grid_axis(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("grid axis must look like name=start:stop:count");
    }
    GridAxis axis;
    axis.name = std::string(text.substr(0, eq));
    std::string_view rest = text.substr(eq + 1);
    std::vector<std::string_view> parts;
    while (true) {
        const auto colon = rest.find(':');
        parts.push_back(rest.substr(0, colon));
        if (colon == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(colon + 1);
    }
    if (parts.size() != 3) {
        throw ParseError("grid axis must look like name=start:stop:count");
    }
    auto number = [&](std::string_view s, auto &out) {
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw ParseError("malformed grid value '" + std::string(s) + "'");
        }
    };
    number(parts[0], axis.start);
    number(parts[1], axis.stop);
    number(parts[2], axis.count);
    if (axis.count == 0) {
        throw ParseError("grid axis '" + axis.name + "' needs count >= 1");
    }
    return axis;
}

RunReport cmd_sweep(const Scenario &scenario, const std::vector<GridAxis> &grid,
                    std::size_t threads) {
    if (scenario.circuit == CircuitKind::Custom) {
        throw ArgumentError("sweep supports filter, projector and ghz scenarios");
    }
    std::size_t points = 1;
    for (const auto &axis : grid) {
        points *= axis.count;
        if (points > 1'000'000) {
            throw ArgumentError("sweep grid exceeds one million points");
        }
    }
    std::vector<Json> records(points);
    std::vector<double> deviations(points, -1.0);

    auto evaluate_point = [&](std::size_t index) {
        Scenario s = scenario;
        s.emit_checkpoints = false;
        Json point = Json::object();
        std::size_t rem = index;
        for (std::size_t a = grid.size(); a-- > 0;) {
            const std::size_t i = rem % grid[a].count;
            rem /= grid[a].count;
            s.parameters[grid[a].name] = grid[a].value(i);
        }
        for (const auto &axis : grid) {
            point[axis.name] = s.parameters[axis.name].real();
        }
        Json rec{{"index", index}, {"point", point}};
        try {
            const auto ev = evaluate(s, false);
            rec["success_probability"] = ev.success;
            rec["expected_probability"] = ev.expected;
            rec["deviation"] = std::abs(ev.success - ev.expected);
            rec["degenerate"] = ev.degenerate;
            deviations[index] = std::abs(ev.success - ev.expected);
        } catch (const Error &e) {
            rec["error"] = e.what();
        }
        records[index] = std::move(rec);
    };

    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, points);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < points; i = next++) {
            evaluate_point(i);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < threads; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }

    double max_dev = 0.0;
    std::size_t evaluated = 0;
    for (double d : deviations) {
        if (d >= 0.0) {
            max_dev = std::max(max_dev, d);
            ++evaluated;
        }
    }
    Json axes = Json::array();
    for (const auto &a : grid) {
        axes.push_back(Json{{"name", a.name}, {"start", a.start}, {"stop", a.stop},
                            {"count", a.count}});
    }
    RunReport r;
    r.json = Json{{"command", "sweep"},
                  {"scenario", scenario_to_json(scenario)},
                  {"grid", axes},
                  {"points", points},
                  {"evaluated", evaluated},
                  {"max_deviation", max_dev},
                  {"records", records}};
    std::ostringstream os;
    os << "sweep " << to_string(scenario.circuit) << ": " << evaluated << "/" << points
       << " points evaluated\n"
       << "  max |p - expected|  " << fmt(max_dev) << '\n';
    r.summary = os.str();
    return r;
}

void attach_wall_time(RunReport &report, double seconds) {
    report.json["wall_time_s"] = seconds;
}

} // namespace fockline::cli
