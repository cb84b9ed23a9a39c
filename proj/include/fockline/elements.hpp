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
 * Linear-optical elements acting on sparse Fock states.
 *
 * Convention: an element with 2x2 matrix u on modes (m1, m2) maps the input
 * creation operators as
 *
 *     a†(m1) -> u(0,0) b†(m1) + u(1,0) b†(m2)
 *     a†(m2) -> u(0,1) b†(m1) + u(1,1) b†(m2)
 *
 * so that the embedded mode unitary U satisfies a†(j) -> sum_i U(i,j) b†(i),
 * and a sequence of elements composes as U_k ... U_2 U_1.
 */
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "fockline/registry.hpp"
#include "fockline/state.hpp"

namespace fockline {

using ComplexMatrix = Eigen::MatrixXcd;

/// Largest photon count handled by one two-mode expansion.
inline constexpr unsigned kMaxPhotons = 16;

/// 2x2 matrix acting on a pair of creation operators; unitary within 1e-12.
class TwoModeUnitary {
  public:
    /// Throws ContractError if `u` is not unitary within 1e-12.
    explicit TwoModeUnitary(const Eigen::Matrix2cd &u);

    /// (1/sqrt2) [[1, 1], [1, -1]].
    static TwoModeUnitary symmetric_bs();
    /// H -> (H+V)/sqrt2, V -> (H-V)/sqrt2.
    static TwoModeUnitary hwp45();
    /// H <-> V without sign.
    static TwoModeUnitary hwp90();

    [[nodiscard]] const Eigen::Matrix2cd &matrix() const noexcept { return u_; }

  private:
    Eigen::Matrix2cd u_;
};

enum class HwpVariant { HWP45, HWP90 };

std::string_view to_string(HwpVariant variant);

struct PhaseShifter {
    ModeKey mode;
    double phi{};
};

struct BeamSplitterSymmetric {
    ModeKey m1;
    ModeKey m2;
};

struct HalfWavePlate {
    std::string path;
    HwpVariant variant{HwpVariant::HWP45};
};

/// Transmits H and reflects V: H(in1)->H(out1), V(in1)->V(out2),
/// H(in2)->H(out2), V(in2)->V(out1). No reflection phase.
struct PolarizingBS {
    std::string in1;
    std::string in2;
    std::string out1;
    std::string out2;
};

struct GeneralTwoMode {
    ModeKey m1;
    ModeKey m2;
    TwoModeUnitary u;
};

using ElementSpec = std::variant<PhaseShifter, BeamSplitterSymmetric,
                                 HalfWavePlate, PolarizingBS, GeneralTwoMode>;

std::string_view kind_name(const ElementSpec &spec);

/// Each term gains exp(i n phi), n the photon count in `mode`.
StateVector apply_phase_shifter(const StateVector &state, ModeId mode,
                                double phi);
StateVector apply_two_mode_unitary(const StateVector &state, ModeId m1,
                                   ModeId m2, const TwoModeUnitary &u);
StateVector apply_symmetric_bs(const StateVector &state, ModeId m1, ModeId m2);
StateVector apply_hwp(const StateVector &state, const std::string &path,
                      HwpVariant variant);
/// Output paths are either the input paths themselves or unregistered
/// labels; input paths that are not reused as outputs are renamed away.
StateVector apply_pbs(const StateVector &state, const std::string &in1,
                      const std::string &in2, const std::string &out1,
                      const std::string &out2);

StateVector apply_element(const StateVector &state, const ElementSpec &spec);
StateVector apply_elements(const StateVector &state,
                           std::span<const ElementSpec> specs);

/// Registry as seen after the element (only PBS changes labels).
RegistryPtr registry_after(const ElementSpec &spec,
                           const RegistryPtr &registry);

/// Full M x M mode unitary of one element in the id space of `registry`.
ComplexMatrix element_mode_unitary(const ElementSpec &spec,
                                   const ModeRegistry &registry);

/// Product of element unitaries for a sequence starting at `registry`.
ComplexMatrix circuit_mode_unitary(std::span<const ElementSpec> specs,
                                   RegistryPtr registry);

bool is_unitary(const ComplexMatrix &u, double tol);

} // namespace fockline
