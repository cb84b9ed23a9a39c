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
#include "fockline/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "fockline/elements.hpp"
#include "fockline/errors.hpp"

namespace fockline::circuits {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kZeroWeight = 1e-24;

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ModeKey scalar_mode(std::string path) { return mode(std::move(path)); }
ModeKey h_mode(std::string path) { return mode(std::move(path), Polarization::H); }
ModeKey v_mode(std::string path) { return mode(std::move(path), Polarization::V); }

/// Linear combination of basis kets on a fixed registry.
class KetBuilder {
  public:
    explicit KetBuilder(RegistryPtr registry) : registry_(std::move(registry)) {}

    KetBuilder &add(Amplitude c,
                    std::initializer_list<std::pair<ModeKey, unsigned>> occ) {
        terms_[occupation(*registry_, occ)] += c;
        return *this;
    }

    [[nodiscard]] StateVector build() const { return {registry_, terms_}; }

  private:
    RegistryPtr registry_;
    StateVector::Terms terms_;
};

struct FilterLabels {
    std::string a2, a3, a2p, a3p, d1, d2;

    explicit FilterLabels(const std::string &prefix)
        : a2(prefix + "2"), a3(prefix + "3"), a2p(prefix + "2'"),
          a3p(prefix + "3'"), d1(prefix + "1''"), d2(prefix + "2''") {}
};

std::vector<DetectionPattern> accepted_patterns(const FilterLabels &l,
                                                HeraldPolicy heralds) {
    std::vector<DetectionPattern> out{
        {{scalar_mode(l.d1), 1}, {scalar_mode(l.d2), 1}}};
    if (heralds == HeraldPolicy::FeedForward) {
        out.push_back({{scalar_mode(l.d1), 2}, {scalar_mode(l.d2), 0}});
        out.push_back({{scalar_mode(l.d1), 0}, {scalar_mode(l.d2), 2}});
    }
    return out;
}

/// Attaches the ancilla pair, entangles it on BS1 and mixes `input` with
/// mode 2' on BS2. Detectors end up on d1, d2; the filtered mode on a3p.
StateVector filter_network(const StateVector &state, const ModeKey &input,
                           const FilterLabels &l) {
    for (const auto &label : {l.a2, l.a3, l.a2p, l.a3p, l.d1, l.d2}) {
        if (state.registry().has_path(label)) {
            throw ArgumentError("filter ancilla label '" + label +
                                "' already in use");
        }
    }
    const auto ancilla = make_basis_state(ModeRegistry::scalar({l.a2, l.a3}),
                                          {{scalar_mode(l.a2), 1},
                                           {scalar_mode(l.a3), 1}});
    auto s = tensor(state, ancilla);
    s = apply_symmetric_bs(s, s.registry().id(scalar_mode(l.a2)),
                           s.registry().id(scalar_mode(l.a3)));
    s = rename_modes(s, {{scalar_mode(l.a2), scalar_mode(l.a2p)},
                         {scalar_mode(l.a3), scalar_mode(l.a3p)}});
    s = apply_symmetric_bs(s, s.registry().id(input),
                           s.registry().id(scalar_mode(l.a2p)));
    return rename_modes(s, {{input, scalar_mode(l.d1)},
                            {scalar_mode(l.a2p), scalar_mode(l.d2)}});
}

std::vector<Branch> filter_heralds(const StateVector &network_state,
                                   const FilterLabels &l, const ModeKey &output,
                                   const FeedForwardRule &rule,
                                   HeraldPolicy heralds) {
    std::vector<Branch> branches;
    for (const auto &pattern : accepted_patterns(l, heralds)) {
        Branch b = apply_feed_forward(project(network_state, pattern), rule);
        if (output != scalar_mode(l.a3p)) {
            b.conditional_state =
                rename_modes(b.conditional_state, {{scalar_mode(l.a3p), output}});
        }
        branches.push_back(std::move(b));
    }
    return branches;
}

void require_normalized(double norm2, const char *what) {
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw ContractError(std::string(what) +
                            " amplitudes are not normalized within 1e-12");
    }
}

} // namespace

std::string_view to_string(HeraldPolicy policy) {
    return policy == HeraldPolicy::Strict ? "strict" : "feedforward";
}

HeraldPolicy herald_policy_from_string(std::string_view text) {
    if (text == "strict") {
        return HeraldPolicy::Strict;
    }
    if (text == "feedforward") {
        return HeraldPolicy::FeedForward;
    }
    throw ArgumentError("unknown herald policy '" + std::string(text) + "'");
}

// --- filter -----------------------------------------------------------------

FilterInput::FilterInput(Amplitude alpha, Amplitude beta, Amplitude gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
    require_normalized(std::norm(alpha) + std::norm(beta) + std::norm(gamma),
                       "filter input");
}

FilterInput FilterInput::normalized(Amplitude alpha, Amplitude beta,
                                    Amplitude gamma) {
    const double n2 = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
    if (!(n2 > kZeroWeight)) {
        throw DegenerateState("filter input is zero");
    }
    const double s = 1.0 / std::sqrt(n2);
    return {alpha * s, beta * s, gamma * s};
}

StateVector FilterInput::state() const {
    const auto in = scalar_mode("1");
    return KetBuilder(ModeRegistry::scalar({"1"}))
        .add(alpha_, {{in, 0}})
        .add(beta_, {{in, 1}})
        .add(gamma_, {{in, 2}})
        .build();
}

FeedForwardRule filter_feed_forward_rule(const std::string &prefix) {
    const FilterLabels l(prefix);
    const std::vector<ElementSpec> flip{
        PhaseShifter{scalar_mode(l.a3p), std::numbers::pi / 2.0}};
    FeedForwardRule rule;
    const auto patterns = accepted_patterns(l, HeraldPolicy::FeedForward);
    rule.corrections[patterns[0]] = {};
    rule.corrections[patterns[1]] = flip;
    rule.corrections[patterns[2]] = flip;
    return rule;
}

std::vector<Branch> apply_filter(const StateVector &state, const ModeKey &input,
                                 const ModeKey &output,
                                 const std::string &prefix,
                                 HeraldPolicy heralds) {
    const FilterLabels l(prefix);
    return filter_heralds(filter_network(state, input, l), l, output,
                          filter_feed_forward_rule(prefix), heralds);
}

StateVector filter_circuit_state(const FilterInput &input) {
    return filter_network(input.state(), scalar_mode("1"), FilterLabels(""));
}

FilterResult run_filter(const FilterInput &input, HeraldPolicy heralds) {
    const FilterLabels l("");
    FilterResult result;
    result.branches = filter_heralds(filter_circuit_state(input), l,
                                     scalar_mode(l.a3p),
                                     filter_feed_forward_rule(""), heralds);

    const auto out_registry = ModeRegistry::scalar({l.a3p});
    const auto target = KetBuilder(out_registry)
                            .add(input.alpha(), {{scalar_mode(l.a3p), 0}})
                            .add(input.gamma(), {{scalar_mode(l.a3p), 2}})
                            .build();
    result.corrected_output = StateVector(out_registry);
    result.target_fidelity = 1.0;
    bool have_output = false;
    for (const auto &b : result.branches) {
        result.success_probability += b.probability;
        if (b.conditional_state.empty()) {
            continue;
        }
        result.target_fidelity =
            std::min(result.target_fidelity, fidelity(b.conditional_state, target));
        if (!have_output) {
            result.corrected_output = b.conditional_state;
            have_output = true;
        }
    }
    result.degenerate = !(result.success_probability > kZeroWeight);
    if (result.degenerate) {
        result.target_fidelity = 0.0;
    }
    return result;
}

// --- projector --------------------------------------------------------------

QubitAmplitudes::QubitAmplitudes(std::array<Amplitude, 4> c) : c_(c) {
    double n2 = 0.0;
    for (const auto &x : c_) {
        n2 += std::norm(x);
    }
    require_normalized(n2, "qubit");
}

QubitAmplitudes QubitAmplitudes::normalized(std::array<Amplitude, 4> c) {
    double n2 = 0.0;
    for (const auto &x : c) {
        n2 += std::norm(x);
    }
    if (!(n2 > kZeroWeight)) {
        throw DegenerateState("qubit amplitudes are zero");
    }
    for (auto &x : c) {
        x /= std::sqrt(n2);
    }
    return QubitAmplitudes(c);
}

StateVector QubitAmplitudes::state() const {
    return KetBuilder(ModeRegistry::polarized({"1", "2"}))
        .add(c_[0], {{h_mode("1"), 1}, {h_mode("2"), 1}})
        .add(c_[1], {{h_mode("1"), 1}, {v_mode("2"), 1}})
        .add(c_[2], {{v_mode("1"), 1}, {h_mode("2"), 1}})
        .add(c_[3], {{v_mode("1"), 1}, {v_mode("2"), 1}})
        .build();
}

const std::vector<std::string> &checkpoint_names() {
    static const std::vector<std::string> names{
        "phi_in", "phi1", "phi2", "phi3", "phi4",
        "phi5",   "phi6", "phi7", "phi_out"};
    return names;
}

namespace {

const std::set<std::string> kProjectorPaths{
    "1", "2", "1'", "2'", "3", "v2", "4", "5", "4'", "5'", "3'", "d3", "6"};
const std::string kFilter1 = "F1.";
const std::string kFilter2 = "F2.";

void require_one_photon(const StateVector &state, const std::string &path) {
    const auto [h, v] = state.registry().polarization_modes(path);
    for (const auto &[occ, amp] : state.terms()) {
        (void)amp;
        if (occ.at(h) + occ.at(v) != 1) {
            throw ContractError("path '" + path +
                                "' must carry exactly one photon in every term");
        }
    }
}

void require_vacuum(const StateVector &state, const ModeKey &key) {
    const ModeId id = state.registry().id(key);
    for (const auto &[occ, amp] : state.terms()) {
        (void)amp;
        if (occ.at(id) != 0) {
            throw ContractError("mode " + to_string(key) +
                                " is expected to be vacuum before filtering");
        }
    }
}

StateVector add_vacuum_path(const StateVector &state, const std::string &path) {
    return tensor(state, StateVector(ModeRegistry::polarized({path}), {
        {OccupationVector::vacuum(2), Amplitude{1.0, 0.0}}}));
}

/// PBS3 through the output HWP90; stages phi6, phi7, phi_out.
StateVector finish_projection(StateVector s, std::vector<Checkpoint> *cps) {
    auto keep = [&](const char *name, const StateVector &st) {
        if (cps != nullptr) {
            cps->push_back({name, st});
        }
    };
    s = apply_pbs(s, "4'", "5'", "3'", "d3");
    s = discard_vacuum_modes(s, {h_mode("d3"), v_mode("d3")});
    keep("phi6", s);
    s = rename_paths(apply_hwp(s, "3'", HwpVariant::HWP45), {{"3'", "6"}});
    keep("phi7", s);
    s = apply_pbs(s, "6", "2'", "1", "2");
    // PBS4 splits each |HV> pair into opposite polarizations; the final
    // HWP90 maps that onto the even-parity basis.
    s = apply_hwp(s, "1", HwpVariant::HWP90);
    keep("phi_out", s);
    return s;
}

} // namespace

ProjectorResult project_even_parity(const StateVector &state,
                                    const std::string &port1,
                                    const std::string &port2,
                                    const ProjectorOptions &options) {
    if (port1 == port2) {
        throw ArgumentError("projector ports must differ");
    }
    require_one_photon(state, port1);
    require_one_photon(state, port2);
    for (const auto &p : state.registry().paths()) {
        if (p == port1 || p == port2) {
            continue;
        }
        if (kProjectorPaths.contains(p) || p.starts_with(kFilter1) ||
            p.starts_with(kFilter2)) {
            throw ArgumentError("spectator path '" + p +
                                "' collides with a projector-internal label");
        }
    }

    ProjectorResult result;
    std::vector<Checkpoint> cps;
    auto keep = [&](const char *name, const StateVector &st) {
        if (options.emit_checkpoints) {
            cps.push_back({name, st});
        }
    };

    std::map<std::string, std::string> to_internal;
    if (port1 != "1") {
        to_internal[port1] = "1";
    }
    if (port2 != "2") {
        to_internal[port2] = "2";
    }
    StateVector s = to_internal.empty() ? state : rename_paths(state, to_internal);
    keep("phi_in", s);

    s = apply_hwp(s, "1", HwpVariant::HWP90);
    keep("phi1", s);
    s = apply_pbs(s, "1", "2", "1'", "2'");
    keep("phi2", s);
    s = rename_paths(apply_hwp(s, "1'", HwpVariant::HWP45), {{"1'", "3"}});
    keep("phi3", s);
    s = apply_pbs(add_vacuum_path(s, "v2"), "3", "v2", "4", "5");
    keep("phi4", s);

    // Path 4 carries only H photons and path 5 only V photons here.
    require_vacuum(s, v_mode("4"));
    require_vacuum(s, h_mode("5"));

    std::vector<Branch> finals;
    for (auto &b1 : apply_filter(s, h_mode("4"), h_mode("4'"), kFilter1,
                                 options.heralds)) {
        const auto after1 =
            rename_modes(b1.conditional_state, {{v_mode("4"), v_mode("4'")}});
        for (auto &b2 : apply_filter(after1, v_mode("5"), v_mode("5'"),
                                     kFilter2, options.heralds)) {
            const auto phi5 =
                rename_modes(b2.conditional_state, {{h_mode("5"), h_mode("5'")}});
            Branch combined;
            combined.pattern = b1.pattern;
            combined.pattern.insert(b2.pattern.begin(), b2.pattern.end());
            combined.probability = b1.probability * b2.probability;
            combined.raw_amplitude_norm = std::sqrt(combined.probability);

            const bool first_live =
                options.emit_checkpoints && cps.size() == 5 && !phi5.empty();
            std::vector<Checkpoint> tail;
            if (first_live) {
                tail.push_back({"phi5", phi5});
            }
            auto out = finish_projection(phi5, first_live ? &tail : nullptr);
            if (first_live) {
                cps.insert(cps.end(), tail.begin(), tail.end());
            }
            std::map<std::string, std::string> back;
            if (port1 != "1") {
                back["1"] = port1;
            }
            if (port2 != "2") {
                back["2"] = port2;
            }
            if (!back.empty()) {
                out = rename_paths(out, back);
            }
            combined.conditional_state = reorder_modes(out, state.registry_ptr());
            finals.push_back(std::move(combined));
        }
    }

    result.output_state = StateVector(state.registry_ptr());
    bool have_output = false;
    for (const auto &b : finals) {
        result.success_probability += b.probability;
        if (!have_output && !b.conditional_state.empty()) {
            result.output_state = b.conditional_state;
            have_output = true;
        }
    }
    result.degenerate = !(result.success_probability > kZeroWeight);
    if (result.degenerate) {
        result.output_state = StateVector(state.registry_ptr());
        result.branch_consistency = 0.0;
    } else {
        for (const auto &b : finals) {
            if (!b.conditional_state.empty()) {
                result.branch_consistency =
                    std::min(result.branch_consistency,
                             fidelity(b.conditional_state, result.output_state));
            }
        }
    }
    result.branches = std::move(finals);
    result.checkpoints = std::move(cps);
    return result;
}

ProjectorResult run_projector(const QubitAmplitudes &input,
                              const ProjectorOptions &options) {
    return project_even_parity(input.state(), "1", "2", options);
}

StateVector reference_checkpoint(std::string_view name, const QubitAmplitudes &c,
                                 const RegistryPtr &registry) {
    KetBuilder k(registry);
    const Amplitude r = kInvSqrt2;
    if (name == "phi_in" || name == "phi_out") {
        k.add(c[0], {{h_mode("1"), 1}, {h_mode("2"), 1}});
        if (name == "phi_in") {
            k.add(c[1], {{h_mode("1"), 1}, {v_mode("2"), 1}});
            k.add(c[2], {{v_mode("1"), 1}, {h_mode("2"), 1}});
        }
        k.add(c[3], {{v_mode("1"), 1}, {v_mode("2"), 1}});
    } else if (name == "phi1") {
        k.add(c[0], {{v_mode("1"), 1}, {h_mode("2"), 1}});
        k.add(c[1], {{v_mode("1"), 1}, {v_mode("2"), 1}});
        k.add(c[2], {{h_mode("1"), 1}, {h_mode("2"), 1}});
        k.add(c[3], {{h_mode("1"), 1}, {v_mode("2"), 1}});
    } else if (name == "phi2") {
        k.add(c[0], {{h_mode("2'"), 1}, {v_mode("2'"), 1}});
        k.add(c[1], {{v_mode("1'"), 1}, {v_mode("2'"), 1}});
        k.add(c[2], {{h_mode("1'"), 1}, {h_mode("2'"), 1}});
        k.add(c[3], {{h_mode("1'"), 1}, {v_mode("1'"), 1}});
    } else if (name == "phi3" || name == "phi4") {
        const bool split = name == "phi4";
        const ModeKey h = h_mode(split ? "4" : "3");
        const ModeKey v = v_mode(split ? "5" : "3");
        k.add(c[0], {{h_mode("2'"), 1}, {v_mode("2'"), 1}});
        k.add(r * c[1], {{h, 1}, {v_mode("2'"), 1}});
        k.add(r * c[2], {{h, 1}, {h_mode("2'"), 1}});
        k.add(-r * c[1], {{v, 1}, {v_mode("2'"), 1}});
        k.add(r * c[2], {{v, 1}, {h_mode("2'"), 1}});
        k.add(r * c[3], {{h, 2}});
        k.add(-r * c[3], {{v, 2}});
    } else if (name == "phi5" || name == "phi6") {
        const bool merged = name == "phi6";
        k.add(c[0], {{h_mode("2'"), 1}, {v_mode("2'"), 1}});
        k.add(r * c[3], {{h_mode(merged ? "3'" : "4'"), 2}});
        k.add(-r * c[3], {{v_mode(merged ? "3'" : "5'"), 2}});
    } else if (name == "phi7") {
        k.add(c[0], {{h_mode("2'"), 1}, {v_mode("2'"), 1}});
        k.add(c[3], {{h_mode("6"), 1}, {v_mode("6"), 1}});
    } else {
        throw ArgumentError("unknown checkpoint '" + std::string(name) + "'");
    }
    return k.build();
}

// --- GHZ --------------------------------------------------------------------

std::string ghz_path(std::size_t k) { return "g" + std::to_string(k); }

namespace {

StateVector ghz_on(const RegistryPtr &registry) {
    std::vector<unsigned> all_h(registry->size(), 0U);
    std::vector<unsigned> all_v(registry->size(), 0U);
    for (const auto &p : registry->paths()) {
        const auto [h, v] = registry->polarization_modes(p);
        all_h[h.index] = 1;
        all_v[v.index] = 1;
    }
    return {registry,
            {{OccupationVector(all_h), Amplitude{kInvSqrt2, 0.0}},
             {OccupationVector(all_v), Amplitude{kInvSqrt2, 0.0}}}};
}

} // namespace

StateVector ghz_state(std::size_t n) {
    if (n == 0) {
        throw ArgumentError("GHZ state needs at least one photon");
    }
    std::vector<std::string> paths;
    for (std::size_t k = 1; k <= n; ++k) {
        paths.push_back(ghz_path(k));
    }
    return ghz_on(ModeRegistry::polarized(paths));
}

GhzResult run_ghz_step(const StateVector &current, HeraldPolicy heralds) {
    const auto paths = current.registry().paths();
    if (paths.empty()) {
        throw ArgumentError("GHZ step needs at least one photon");
    }
    for (const auto &p : paths) {
        require_one_photon(current, p);
    }
    if (current.registry().size() != 2 * paths.size()) {
        throw ContractError("GHZ step input must consist of polarized paths");
    }
    const std::string fresh = ghz_path(paths.size() + 1);
    if (current.registry().has_path(fresh)) {
        throw ArgumentError("path '" + fresh + "' already in use");
    }
    const auto joint = tensor(current, ghz_on(ModeRegistry::polarized({fresh})));
    const auto projected = project_even_parity(
        joint, paths.back(), fresh, {heralds, /*emit_checkpoints=*/false});
    if (projected.degenerate) {
        throw DegenerateState("GHZ step projected onto a zero-probability state");
    }

    GhzResult r;
    r.n = paths.size() + 1;
    r.state = projected.output_state;
    r.step_probabilities = {projected.success_probability};
    r.cumulative_probability = projected.success_probability;
    r.target_fidelity = fidelity(r.state, ghz_on(r.state.registry_ptr()));
    return r;
}

GhzResult run_ghz_chain(std::size_t n, HeraldPolicy heralds) {
    if (n < 2) {
        throw ArgumentError("GHZ chain needs n >= 2");
    }
    GhzResult r;
    r.n = 1;
    r.state = ghz_state(1);
    for (std::size_t k = 2; k <= n; ++k) {
        auto step = run_ghz_step(r.state, heralds);
        r.n = step.n;
        r.state = std::move(step.state);
        r.step_probabilities.push_back(step.cumulative_probability);
        r.cumulative_probability *= step.cumulative_probability;
        r.target_fidelity = step.target_fidelity;
    }
    return r;
}

} // namespace fockline::circuits
