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
#include "fockline/random.hpp"

#include <numbers>
#include <string>

namespace fockline::random {

namespace {

std::size_t uniform_index(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

Amplitude gaussian(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

ComplexMatrix random_unitary(std::size_t n, Rng &rng) {
    const auto dim = static_cast<Eigen::Index>(n);
    ComplexMatrix z(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            z(r, c) = gaussian(rng);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Amplitude d = r(i, i);
        q.col(i) *= std::abs(d) > 0.0 ? d / std::abs(d) : Amplitude{1.0};
    }
    return q;
}

TwoModeUnitary random_two_mode_unitary(Rng &rng) {
    return TwoModeUnitary(Eigen::Matrix2cd(random_unitary(2, rng)));
}

StateVector random_state(RegistryPtr registry, unsigned max_photons,
                         std::size_t max_terms, Rng &rng) {
    const std::size_t modes = registry->size();
    StateVector::Terms terms;
    const std::size_t count = uniform_index(rng, 1, max_terms);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<unsigned> occ(modes, 0U);
        const auto photons = static_cast<unsigned>(uniform_index(rng, 0, max_photons));
        for (unsigned p = 0; p < photons && modes > 0; ++p) {
            ++occ[uniform_index(rng, 0, modes - 1)];
        }
        terms[OccupationVector(std::move(occ))] += gaussian(rng);
    }
    StateVector s(std::move(registry), std::move(terms));
    return s.norm_sq() > 1e-24 ? normalize(s) : s;
}

RandomCircuit random_circuit(Rng &rng, const CircuitLimits &limits) {
    const std::size_t modes = uniform_index(rng, limits.min_modes, limits.max_modes);
    const std::size_t polarized_paths = uniform_index(rng, 0, std::min<std::size_t>(2, modes / 2));
    std::vector<ModeKey> keys;
    std::vector<std::string> pol_paths;
    for (std::size_t p = 0; p < polarized_paths; ++p) {
        const std::string path = "p" + std::to_string(p);
        pol_paths.push_back(path);
        keys.push_back({path, Polarization::H});
        keys.push_back({path, Polarization::V});
    }
    for (std::size_t s = 0; keys.size() < modes; ++s) {
        keys.push_back({"m" + std::to_string(s), Polarization::None});
    }

    RandomCircuit c;
    c.registry = ModeRegistry::make(keys);

    std::vector<unsigned> occ(modes, 0U);
    const auto photons = static_cast<unsigned>(uniform_index(rng, 1, limits.max_photons));
    for (unsigned p = 0; p < photons; ++p) {
        ++occ[uniform_index(rng, 0, modes - 1)];
    }
    c.input = OccupationVector(std::move(occ));

    auto pick_pair = [&]() {
        const std::size_t a = uniform_index(rng, 0, modes - 1);
        std::size_t b = uniform_index(rng, 0, modes - 2);
        if (b >= a) {
            ++b;
        }
        return std::pair{keys[a], keys[b]};
    };

    const std::size_t count = uniform_index(rng, 1, limits.max_elements);
    while (c.elements.size() < count) {
        switch (uniform_index(rng, 0, 4)) {
        case 0:
            c.elements.emplace_back(PhaseShifter{
                keys[uniform_index(rng, 0, modes - 1)],
                std::uniform_real_distribution<double>(-std::numbers::pi,
                                                       std::numbers::pi)(rng)});
            break;
        case 1: {
            auto [a, b] = pick_pair();
            c.elements.emplace_back(BeamSplitterSymmetric{a, b});
            break;
        }
        case 2: {
            auto [a, b] = pick_pair();
            c.elements.emplace_back(GeneralTwoMode{a, b, random_two_mode_unitary(rng)});
            break;
        }
        case 3:
            if (!pol_paths.empty()) {
                c.elements.emplace_back(HalfWavePlate{
                    pol_paths[uniform_index(rng, 0, pol_paths.size() - 1)],
                    uniform_index(rng, 0, 1) == 0 ? HwpVariant::HWP45
                                                  : HwpVariant::HWP90});
            }
            break;
        default:
            if (pol_paths.size() == 2) {
                c.elements.emplace_back(
                    PolarizingBS{pol_paths[0], pol_paths[1], pol_paths[0], pol_paths[1]});
            }
            break;
        }
    }
    return c;
}

} // namespace fockline::random
