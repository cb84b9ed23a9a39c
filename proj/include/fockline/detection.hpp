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
 * Ideal photon-number-resolving detection, post-selection and classical
 * feed-forward.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "fockline/elements.hpp"
#include "fockline/state.hpp"

namespace fockline {

/// Required photon count per detected mode. Modes are addressed by label
/// because detection removes them from the registry.
using DetectionPattern = std::map<ModeKey, unsigned>;

std::string to_string(const DetectionPattern &pattern);

/// One measurement outcome.
struct Branch {
    DetectionPattern pattern;
    /// Summed |amplitude|² of the matching terms.
    double probability{0.0};
    /// Normalized state on the undetected modes; empty when the outcome has
    /// (numerically) zero weight.
    StateVector conditional_state;
    double raw_amplitude_norm{0.0};
};

/**
 * Post-selects `state` on `pattern`. The detected modes are removed from
 * the conditional state's registry. Zero-probability patterns give an empty
 * conditional state.
 */
Branch project(const StateVector &state, const DetectionPattern &pattern);

/// Every outcome present in `state` when `measured` are detected, ordered by
/// pattern. With no measured modes the single branch carries the whole state.
std::vector<Branch> outcome_distribution(const StateVector &state,
                                         const std::vector<ModeKey> &measured);

/// Corrections applied to the surviving modes after a given outcome.
struct FeedForwardRule {
    std::map<DetectionPattern, std::vector<ElementSpec>> corrections;
};

/// Throws UnhandledHerald when the rule has no entry for the branch pattern
/// and UnregisteredMode when a correction addresses a detected mode.
Branch apply_feed_forward(const Branch &branch, const FeedForwardRule &rule);

} // namespace fockline
