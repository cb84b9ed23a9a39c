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
 * Cross-check of the sequential element engine against the permanent
 * oracle on seeded random circuits.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fockline/random.hpp"

namespace fockline::oracle {

inline constexpr double kAmplitudeTolerance = 1e-10;

struct EquivalenceTrial {
    std::size_t index{0};
    std::size_t modes{0};
    unsigned photons{0};
    std::size_t elements{0};
    /// max |engine - permanent| over all output occupations.
    double max_amplitude_error{0.0};
    /// max |norm² - 1| after each element.
    double max_norm_drift{0.0};
    /// |sum of outcome probabilities - norm²| for a random detector subset.
    double completeness_error{0.0};
    bool photon_number_conserved{true};

    [[nodiscard]] bool matched() const {
        return max_amplitude_error <= kAmplitudeTolerance;
    }
};

/// Trial `index` of the suite seeded by `seed`; independent of every other
/// trial.
EquivalenceTrial run_equivalence_trial(std::uint64_t seed, std::size_t index,
                                       const random::CircuitLimits &limits = {});

/// Trials 0..count-1, evaluated on up to `threads` workers (0 = hardware
/// concurrency) and returned in index order.
std::vector<EquivalenceTrial>
run_equivalence_suite(std::uint64_t seed, std::size_t count,
                      std::size_t threads = 0,
                      const random::CircuitLimits &limits = {});

} // namespace fockline::oracle
