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
#include <doctest.h>

#include "fockline/elements.hpp"
#include "fockline/errors.hpp"
#include "support.hpp"

using namespace fockline;
using fockline::testing::kInvSqrt2;
using fockline::testing::max_abs_diff;

namespace {

const auto kAB = ModeRegistry::scalar({"a", "b"});
const ModeId kA{0};
const ModeId kB{1};

StateVector ket(unsigned na, unsigned nb) {
    return make_basis_state(kAB, OccupationVector{na, nb});
}

} // namespace

TEST_CASE("symmetric beam splitter on single photons") {
    const auto out = apply_symmetric_bs(ket(1, 0), kA, kB);
    CHECK(max_abs_diff(out, superpose(ket(1, 0), kInvSqrt2, ket(0, 1), kInvSqrt2)) < 1e-15);
    const auto out2 = apply_symmetric_bs(ket(0, 1), kA, kB);
    CHECK(max_abs_diff(out2, superpose(ket(1, 0), kInvSqrt2, ket(0, 1), -kInvSqrt2)) < 1e-15);
}

TEST_CASE("two photons bunch on a symmetric beam splitter") {
    const auto out = apply_symmetric_bs(ket(1, 1), kA, kB);
    CHECK(out.amplitude(OccupationVector{1, 1}) == Amplitude(0.0));
    CHECK(max_abs_diff(out, superpose(ket(2, 0), kInvSqrt2, ket(0, 2), -kInvSqrt2)) < 1e-15);
}

TEST_CASE("beam splitter twice is the identity") {
    const auto in = superpose(ket(2, 1), 0.6, ket(0, 3), Amplitude(0.0, 0.8));
    const auto out = apply_symmetric_bs(apply_symmetric_bs(in, kA, kB), kA, kB);
    CHECK(max_abs_diff(out, in) < 1e-14);
}

TEST_CASE("phase shifter multiplies by exp(i n phi)") {
    const auto in = superpose(ket(0, 0), 0.6, ket(3, 0), 0.8);
    const auto out = apply_phase_shifter(in, kA, 0.25);
    CHECK(std::abs(out.amplitude(OccupationVector{0, 0}) - 0.6) < 1e-15);
    CHECK(std::abs(out.amplitude(OccupationVector{3, 0}) - 0.8 * std::polar(1.0, 0.75)) <
          1e-15);
}

TEST_CASE("half-wave plates") {
    const auto reg = ModeRegistry::polarized({"p"});
    const auto h = make_basis_state(reg, {{mode("p", Polarization::H), 1}});
    const auto v = make_basis_state(reg, {{mode("p", Polarization::V), 1}});

    CHECK(max_abs_diff(apply_hwp(h, "p", HwpVariant::HWP45),
                       superpose(h, kInvSqrt2, v, kInvSqrt2)) < 1e-15);
    CHECK(max_abs_diff(apply_hwp(v, "p", HwpVariant::HWP45),
                       superpose(h, kInvSqrt2, v, -kInvSqrt2)) < 1e-15);
    CHECK(max_abs_diff(apply_hwp(h, "p", HwpVariant::HWP90), v) < 1e-15);
    CHECK(max_abs_diff(apply_hwp(v, "p", HwpVariant::HWP90), h) < 1e-15);
    CHECK_THROWS_AS(apply_hwp(h, "q", HwpVariant::HWP90), UnregisteredMode);
    CHECK_THROWS(apply_hwp(ket(1, 0), "a", HwpVariant::HWP45));
}

TEST_CASE("polarizing beam splitter routes H straight and V across") {
    const auto reg = ModeRegistry::polarized({"1", "2"});
    const auto in = make_basis_state(
        reg, {{mode("1", Polarization::H), 1}, {mode("1", Polarization::V), 1},
              {mode("2", Polarization::V), 2}});
    const auto out = apply_pbs(in, "1", "2", "x", "y");
    CHECK(out.registry().has_path("x"));
    CHECK(out.registry().has_path("y"));
    CHECK_FALSE(out.registry().has_path("1"));
    CHECK(out.amplitude({{mode("x", Polarization::H), 1},
                         {mode("x", Polarization::V), 2},
                         {mode("y", Polarization::V), 1}}) == Amplitude(1.0));
    CHECK_THROWS(apply_pbs(in, "1", "1", "x", "y"));
    CHECK_THROWS(apply_pbs(in, "1", "2", "x", "x"));
}

TEST_CASE("general two-mode unitary validation") {
    Eigen::Matrix2cd bad;
    bad << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS(TwoModeUnitary{bad}, ContractError);
    CHECK_THROWS_AS(apply_two_mode_unitary(ket(1, 0), kA, kA, TwoModeUnitary::symmetric_bs()),
                    ArgumentError);
}

TEST_CASE("photon cap") {
    CHECK_NOTHROW(apply_symmetric_bs(ket(8, 8), kA, kB));
    CHECK_THROWS_AS(apply_symmetric_bs(ket(9, 8), kA, kB), ContractError);
}

TEST_CASE("mode unitaries are unitary and compose in circuit order") {
    const auto reg = ModeRegistry::make({mode("a"), mode("p", Polarization::H),
                                         mode("p", Polarization::V), mode("b")});
    const std::vector<ElementSpec> circuit{
        BeamSplitterSymmetric{mode("a"), mode("p", Polarization::H)},
        PhaseShifter{mode("a"), 0.4},
        HalfWavePlate{"p", HwpVariant::HWP45},
        BeamSplitterSymmetric{mode("b"), mode("a")},
    };
    const auto u = circuit_mode_unitary(circuit, reg);
    CHECK(is_unitary(u, 1e-12));

    ComplexMatrix expected = ComplexMatrix::Identity(4, 4);
    RegistryPtr current = reg;
    for (const auto &e : circuit) {
        const auto m = element_mode_unitary(e, *current);
        CHECK(is_unitary(m, 1e-12));
        expected = m * expected;
        current = registry_after(e, current);
    }
    CHECK((u - expected).norm() < 1e-14);
}

TEST_CASE("element kind names") {
    CHECK(kind_name(ElementSpec{PhaseShifter{mode("a"), 0.0}}) == "phase");
    CHECK(kind_name(ElementSpec{PolarizingBS{"1", "2", "3", "4"}}) == "pbs");
}
