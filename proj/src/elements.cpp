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
#include "fockline/elements.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fockline/errors.hpp"

namespace fockline {

namespace {

constexpr std::array<double, kMaxPhotons + 1> make_factorials() {
    std::array<double, kMaxPhotons + 1> f{};
    f[0] = 1.0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        f[i] = f[i - 1] * static_cast<double>(i);
    }
    return f;
}

constexpr auto kFactorial = make_factorials();

double binomial(unsigned n, unsigned k) {
    return kFactorial[n] / (kFactorial[k] * kFactorial[n - k]);
}

std::vector<Amplitude> powers(Amplitude x, unsigned n) {
    std::vector<Amplitude> p(n + 1);
    p[0] = 1.0;
    for (unsigned i = 1; i <= n; ++i) {
        p[i] = p[i - 1] * x;
    }
    return p;
}

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

} // namespace

TwoModeUnitary::TwoModeUnitary(const Eigen::Matrix2cd &u) : u_(u) {
    if (!is_unitary(u_, 1e-12)) {
        throw ContractError("two-mode matrix is not unitary within 1e-12");
    }
}

TwoModeUnitary TwoModeUnitary::symmetric_bs() {
    const double s = std::numbers::sqrt2 / 2.0;
    Eigen::Matrix2cd u;
    u << s, s, s, -s;
    return TwoModeUnitary(u);
}

TwoModeUnitary TwoModeUnitary::hwp45() { return symmetric_bs(); }

TwoModeUnitary TwoModeUnitary::hwp90() {
    Eigen::Matrix2cd u;
    u << 0.0, 1.0, 1.0, 0.0;
    return TwoModeUnitary(u);
}

std::string_view to_string(HwpVariant variant) {
    return variant == HwpVariant::HWP45 ? "HWP45" : "HWP90";
}

std::string_view kind_name(const ElementSpec &spec) {
    return std::visit(
        overloaded{
            [](const PhaseShifter &) { return std::string_view("phase"); },
            [](const BeamSplitterSymmetric &) {
                return std::string_view("bs");
            },
            [](const HalfWavePlate &) { return std::string_view("hwp"); },
            [](const PolarizingBS &) { return std::string_view("pbs"); },
            [](const GeneralTwoMode &) {
                return std::string_view("two_mode");
            }},
        spec);
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    const ComplexMatrix d =
        u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

StateVector apply_phase_shifter(const StateVector &state, ModeId mode,
                                double phi) {
    (void)state.registry().key(mode);
    StateVector::Terms out;
    for (const auto &[occ, amp] : state.terms()) {
        const double n = occ.at(mode);
        out.emplace(occ, amp * std::polar(1.0, n * phi));
    }
    return {state.registry_ptr(), std::move(out)};
}

StateVector apply_two_mode_unitary(const StateVector &state, ModeId m1,
                                   ModeId m2, const TwoModeUnitary &u) {
    if (m1 == m2) {
        throw ArgumentError("two-mode element needs distinct modes");
    }
    (void)state.registry().key(m1);
    (void)state.registry().key(m2);
    const auto &m = u.matrix();

    StateVector::Terms out;
    for (const auto &[occ, amp] : state.terms()) {
        const unsigned n1 = occ.at(m1);
        const unsigned n2 = occ.at(m2);
        if (n1 + n2 > kMaxPhotons) {
            throw ContractError("more than " + std::to_string(kMaxPhotons) +
                                " photons on a two-mode element");
        }
        if (n1 + n2 == 0) {
            out[occ] += amp;
            continue;
        }
        // (u00 b1 + u10 b2)^n1 (u01 b1 + u11 b2)^n2 / sqrt(n1! n2!)
        const auto p00 = powers(m(0, 0), n1);
        const auto p10 = powers(m(1, 0), n1);
        const auto p01 = powers(m(0, 1), n2);
        const auto p11 = powers(m(1, 1), n2);
        std::vector<Amplitude> coeff(n1 + n2 + 1);
        for (unsigned j = 0; j <= n1; ++j) {
            const Amplitude first = binomial(n1, j) * p00[j] * p10[n1 - j];
            for (unsigned l = 0; l <= n2; ++l) {
                coeff[j + l] += first * binomial(n2, l) * p01[l] * p11[n2 - l];
            }
        }
        const double in_norm = std::sqrt(kFactorial[n1] * kFactorial[n2]);
        for (unsigned k1 = 0; k1 <= n1 + n2; ++k1) {
            if (coeff[k1] == Amplitude{}) {
                continue;
            }
            const unsigned k2 = n1 + n2 - k1;
            const double out_norm = std::sqrt(kFactorial[k1] * kFactorial[k2]);
            out[occ.with(m1, k1).with(m2, k2)] +=
                amp * coeff[k1] * (out_norm / in_norm);
        }
    }
    return {state.registry_ptr(), std::move(out)};
}

StateVector apply_symmetric_bs(const StateVector &state, ModeId m1, ModeId m2) {
    static const TwoModeUnitary bs = TwoModeUnitary::symmetric_bs();
    return apply_two_mode_unitary(state, m1, m2, bs);
}

StateVector apply_hwp(const StateVector &state, const std::string &path,
                      HwpVariant variant) {
    static const TwoModeUnitary h45 = TwoModeUnitary::hwp45();
    static const TwoModeUnitary h90 = TwoModeUnitary::hwp90();
    const auto [h, v] = state.registry().polarization_modes(path);
    return apply_two_mode_unitary(state, h, v,
                                  variant == HwpVariant::HWP45 ? h45 : h90);
}

namespace {

RegistryPtr pbs_registry(const ModeRegistry &registry, const std::string &in1,
                         const std::string &in2, const std::string &out1,
                         const std::string &out2) {
    if (in1 == in2 || out1 == out2) {
        throw ArgumentError("PBS ports must be distinct");
    }
    (void)registry.polarization_modes(in1);
    (void)registry.polarization_modes(in2);
    for (const auto &out : {out1, out2}) {
        if (out != in1 && out != in2 && registry.has_path(out)) {
            throw ArgumentError("PBS output '" + out +
                                "' collides with a registered path");
        }
    }
    std::map<std::string, std::string> renames;
    if (in1 != out1) {
        renames[in1] = out1;
    }
    if (in2 != out2) {
        renames[in2] = out2;
    }
    return renames.empty() ? RegistryPtr(std::make_shared<ModeRegistry>(registry))
                           : registry.paths_renamed(renames);
}

} // namespace

StateVector apply_pbs(const StateVector &state, const std::string &in1,
                      const std::string &in2, const std::string &out1,
                      const std::string &out2) {
    auto registry = pbs_registry(state.registry(), in1, in2, out1, out2);
    // Ids are stable under renaming; the V sub-modes trade places.
    const ModeId v1 = state.registry().polarization_modes(in1).second;
    const ModeId v2 = state.registry().polarization_modes(in2).second;
    return map_terms(state, std::move(registry),
                     [&](const OccupationVector &occ) {
                         return occ.with(v1, occ.at(v2)).with(v2, occ.at(v1));
                     });
}

StateVector apply_element(const StateVector &state, const ElementSpec &spec) {
    const auto &reg = state.registry();
    return std::visit(
        overloaded{
            [&](const PhaseShifter &e) {
                return apply_phase_shifter(state, reg.id(e.mode), e.phi);
            },
            [&](const BeamSplitterSymmetric &e) {
                return apply_symmetric_bs(state, reg.id(e.m1), reg.id(e.m2));
            },
            [&](const HalfWavePlate &e) {
                return apply_hwp(state, e.path, e.variant);
            },
            [&](const PolarizingBS &e) {
                return apply_pbs(state, e.in1, e.in2, e.out1, e.out2);
            },
            [&](const GeneralTwoMode &e) {
                return apply_two_mode_unitary(state, reg.id(e.m1),
                                              reg.id(e.m2), e.u);
            }},
        spec);
}

StateVector apply_elements(const StateVector &state,
                           std::span<const ElementSpec> specs) {
    StateVector current = state;
    for (const auto &spec : specs) {
        current = apply_element(current, spec);
    }
    return current;
}

RegistryPtr registry_after(const ElementSpec &spec,
                           const RegistryPtr &registry) {
    if (const auto *pbs = std::get_if<PolarizingBS>(&spec)) {
        return pbs_registry(*registry, pbs->in1, pbs->in2, pbs->out1,
                            pbs->out2);
    }
    return registry;
}

namespace {

ComplexMatrix embed(const ModeRegistry &registry, ModeId m1, ModeId m2,
                    const Eigen::Matrix2cd &u) {
    if (m1 == m2) {
        throw ArgumentError("two-mode element needs distinct modes");
    }
    const auto n = static_cast<Eigen::Index>(registry.size());
    ComplexMatrix full = ComplexMatrix::Identity(n, n);
    const auto i = static_cast<Eigen::Index>(m1.index);
    const auto j = static_cast<Eigen::Index>(m2.index);
    full(i, i) = u(0, 0);
    full(j, i) = u(1, 0);
    full(i, j) = u(0, 1);
    full(j, j) = u(1, 1);
    return full;
}

} // namespace

ComplexMatrix element_mode_unitary(const ElementSpec &spec,
                                   const ModeRegistry &registry) {
    const auto n = static_cast<Eigen::Index>(registry.size());
    return std::visit(
        overloaded{
            [&](const PhaseShifter &e) -> ComplexMatrix {
                ComplexMatrix full = ComplexMatrix::Identity(n, n);
                const auto i = static_cast<Eigen::Index>(registry.id(e.mode).index);
                full(i, i) = std::polar(1.0, e.phi);
                return full;
            },
            [&](const BeamSplitterSymmetric &e) -> ComplexMatrix {
                return embed(registry, registry.id(e.m1), registry.id(e.m2),
                             TwoModeUnitary::symmetric_bs().matrix());
            },
            [&](const HalfWavePlate &e) -> ComplexMatrix {
                const auto [h, v] = registry.polarization_modes(e.path);
                return embed(registry, h, v,
                             e.variant == HwpVariant::HWP45
                                 ? TwoModeUnitary::hwp45().matrix()
                                 : TwoModeUnitary::hwp90().matrix());
            },
            [&](const PolarizingBS &e) -> ComplexMatrix {
                (void)pbs_registry(registry, e.in1, e.in2, e.out1, e.out2);
                const auto v1 = static_cast<Eigen::Index>(
                    registry.polarization_modes(e.in1).second.index);
                const auto v2 = static_cast<Eigen::Index>(
                    registry.polarization_modes(e.in2).second.index);
                ComplexMatrix full = ComplexMatrix::Identity(n, n);
                full(v1, v1) = 0.0;
                full(v2, v2) = 0.0;
                full(v1, v2) = 1.0;
                full(v2, v1) = 1.0;
                return full;
            },
            [&](const GeneralTwoMode &e) -> ComplexMatrix {
                return embed(registry, registry.id(e.m1), registry.id(e.m2),
                             e.u.matrix());
            }},
        spec);
}

ComplexMatrix circuit_mode_unitary(std::span<const ElementSpec> specs,
                                   RegistryPtr registry) {
    const auto n = static_cast<Eigen::Index>(registry->size());
    ComplexMatrix total = ComplexMatrix::Identity(n, n);
    for (const auto &spec : specs) {
        total = element_mode_unitary(spec, *registry) * total;
        registry = registry_after(spec, registry);
    }
    return total;
}

} // namespace fockline
