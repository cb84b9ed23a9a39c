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
 * Seeded generators for states, unitaries and circuits. Every stream is a
 * pure function of (seed, stream index), so trials can run in any order.
 */
#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "fockline/elements.hpp"
#include "fockline/state.hpp"

namespace fockline::random {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Standard complex Gaussian sample.
Amplitude gaussian(Rng &rng);

/// Haar-random unitary (QR of a Gaussian matrix with phase fix).
ComplexMatrix random_unitary(std::size_t n, Rng &rng);
TwoModeUnitary random_two_mode_unitary(Rng &rng);

/// Uniformly random point on the complex unit sphere.
template <std::size_t N> std::array<Amplitude, N> unit_vector(Rng &rng) {
    std::array<Amplitude, N> v{};
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto &x : v) {
            x = gaussian(rng);
            n2 += std::norm(x);
        }
    } while (n2 < 1e-12);
    for (auto &x : v) {
        x /= std::sqrt(n2);
    }
    return v;
}

/// Normalized superposition of up to `max_terms` basis states with at most
/// `max_photons` photons each.
StateVector random_state(RegistryPtr registry, unsigned max_photons,
                         std::size_t max_terms, Rng &rng);

struct CircuitLimits {
    std::size_t min_modes{2};
    std::size_t max_modes{5};
    unsigned max_photons{4};
    std::size_t max_elements{6};
};

struct RandomCircuit {
    RegistryPtr registry;
    OccupationVector input;
    std::vector<ElementSpec> elements;
};

/// Random mode set (unpolarized modes plus up to two polarized paths), a
/// basis input with 1..max_photons photons and 1..max_elements elements of
/// every kind.
RandomCircuit random_circuit(Rng &rng, const CircuitLimits &limits = {});

} // namespace fockline::random
