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
 * Heralded linear-optics circuits: the single-mode filter that removes the
 * one-photon component of a0|0> + a1|1> + a2|2>, the two-photon
 * even-parity projector built from two such filters, and step-by-step GHZ
 * state generation.
 */
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fockline/detection.hpp"
#include "fockline/state.hpp"

namespace fockline::circuits {

/// Which filter heralds are kept: all three with feed-forward, or (1,1)
/// only.
enum class HeraldPolicy { FeedForward, Strict };

std::string_view to_string(HeraldPolicy policy);
HeraldPolicy herald_policy_from_string(std::string_view text);

/// alpha|0> + beta|1> + gamma|2>; normalized within 1e-12.
class FilterInput {
  public:
    /// Throws ContractError unless normalized.
    FilterInput(Amplitude alpha, Amplitude beta, Amplitude gamma);
    /// Rescales to unit norm; throws DegenerateState on all-zero input.
    static FilterInput normalized(Amplitude alpha, Amplitude beta,
                                  Amplitude gamma);

    [[nodiscard]] Amplitude alpha() const noexcept { return alpha_; }
    [[nodiscard]] Amplitude beta() const noexcept { return beta_; }
    [[nodiscard]] Amplitude gamma() const noexcept { return gamma_; }

    /// The input as a state on the single unpolarized mode "1".
    [[nodiscard]] StateVector state() const;

  private:
    Amplitude alpha_;
    Amplitude beta_;
    Amplitude gamma_;
};

struct FilterResult {
    /// Accepted heralds in the order (1,1), (2,0), (0,2), after feed-forward.
    std::vector<Branch> branches;
    /// Normalized output on mode "3'"; empty when degenerate.
    StateVector corrected_output;
    double success_probability{0.0};
    /// Smallest fidelity of an accepted branch to normalize(alpha|0> +
    /// gamma|2>).
    double target_fidelity{0.0};
    bool degenerate{false};
};

/// Joint state on modes 1'', 2'' (detectors) and 3' (output) just before
/// detection.
StateVector filter_circuit_state(const FilterInput &input);

FilterResult run_filter(const FilterInput &input,
                        HeraldPolicy heralds = HeraldPolicy::FeedForward);

/**
 * Runs one filter on mode `input` of an arbitrary state. Two ancilla modes
 * labelled with `prefix` are attached and measured; the filtered mode
 * emerges as `output`. Returns the accepted branches with feed-forward
 * applied; probabilities are relative to the input norm.
 */
std::vector<Branch> apply_filter(const StateVector &state, const ModeKey &input,
                                 const ModeKey &output,
                                 const std::string &prefix,
                                 HeraldPolicy heralds);

/// pi/2 phase on the surviving ancilla mode `prefix`3' after (2,0) or
/// (0,2); nothing after (1,1).
FeedForwardRule filter_feed_forward_rule(const std::string &prefix);

/// c0|HH> + c1|HV> + c2|VH> + c3|VV> on paths "1" and "2".
class QubitAmplitudes {
  public:
    /// Throws ContractError unless normalized within 1e-12.
    explicit QubitAmplitudes(std::array<Amplitude, 4> c);
    static QubitAmplitudes normalized(std::array<Amplitude, 4> c);

    [[nodiscard]] const std::array<Amplitude, 4> &c() const noexcept {
        return c_;
    }
    [[nodiscard]] Amplitude operator[](std::size_t i) const { return c_.at(i); }
    [[nodiscard]] StateVector state() const;

  private:
    std::array<Amplitude, 4> c_;
};

struct ProjectorOptions {
    HeraldPolicy heralds{HeraldPolicy::FeedForward};
    bool emit_checkpoints{true};
};

struct Checkpoint {
    std::string name;
    StateVector state;
};

struct ProjectorResult {
    /// Normalized output over the two port paths (H, V each); empty when
    /// degenerate.
    StateVector output_state;
    double success_probability{0.0};
    /// phi_in, phi1 ... phi7, phi_out (post-filter stages taken from the
    /// first accepted branch).
    std::vector<Checkpoint> checkpoints;
    /// One entry per combination of filter heralds; conditional_state is the
    /// final output of that branch.
    std::vector<Branch> branches;
    /// Smallest fidelity between any nonzero branch output and output_state.
    double branch_consistency{1.0};
    bool degenerate{false};
};

/// Checkpoint names in pipeline order.
const std::vector<std::string> &checkpoint_names();

/**
 * Projects the photons on paths `port1` and `port2` of `state` onto
 * span{|HH>, |VV>}. Other paths are spectators and are left untouched. Each
 * port must carry exactly one photon in every term.
 */
ProjectorResult project_even_parity(const StateVector &state,
                                    const std::string &port1,
                                    const std::string &port2,
                                    const ProjectorOptions &options = {});

ProjectorResult run_projector(const QubitAmplitudes &input,
                              const ProjectorOptions &options = {});

/// Closed form of a projector stage for input `c`, built on `registry`
/// (usually the registry of the simulated checkpoint).
StateVector reference_checkpoint(std::string_view name, const QubitAmplitudes &c,
                                 const RegistryPtr &registry);

struct GhzResult {
    std::size_t n{0};
    StateVector state;
    std::vector<double> step_probabilities;
    double cumulative_probability{1.0};
    /// Fidelity of `state` to the n-photon GHZ state.
    double target_fidelity{0.0};
};

/// Path label of the k-th GHZ photon (1-based).
std::string ghz_path(std::size_t k);
/// (|H...H> + |V...V>)/sqrt2 on paths g1..gn; n = 1 gives (|H>+|V>)/sqrt2.
StateVector ghz_state(std::size_t n);

/**
 * Adds one photon: the last path of `current` and a fresh (|H>+|V>)/sqrt2
 * photon go through the projector. `current` must hold one photon on each
 * of its polarized paths g1..gk. Throws DegenerateState if the projection
 * has zero probability.
 */
GhzResult run_ghz_step(const StateVector &current,
                       HeraldPolicy heralds = HeraldPolicy::FeedForward);

/// Builds the n-photon GHZ state from single photons. Throws ArgumentError
/// for n < 2.
GhzResult run_ghz_chain(std::size_t n,
                        HeraldPolicy heralds = HeraldPolicy::FeedForward);

} // namespace fockline::circuits
