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

#include "fockline/errors.hpp"
#include "fockline/state.hpp"
#include "support.hpp"

using namespace fockline;
using fockline::testing::kInvSqrt2;

namespace {

const auto kAB = ModeRegistry::scalar({"a", "b"});

StateVector ket(unsigned na, unsigned nb) {
    return make_basis_state(kAB, OccupationVector{na, nb});
}

} // namespace

TEST_CASE("basis states and amplitudes") {
    const auto s = ket(1, 2);
    CHECK(s.size() == 1);
    CHECK(s.norm_sq() == doctest::Approx(1.0));
    CHECK(s.amplitude(OccupationVector{1, 2}) == Amplitude(1.0));
    CHECK(s.amplitude({{mode("a"), 1}, {mode("b"), 2}}) == Amplitude(1.0));
    CHECK(s.amplitude(OccupationVector{0, 3}) == Amplitude(0.0));
    CHECK_THROWS_AS(make_basis_state(kAB, OccupationVector{1}), DimensionError);
}

TEST_CASE("exact zeros are dropped, small values are kept") {
    const StateVector s(kAB, {{OccupationVector{0, 0}, 0.0},
                              {OccupationVector{1, 0}, Amplitude(1e-30, 0.0)}});
    CHECK(s.size() == 1);
    CHECK(prune(s, 1e-20).empty());
}

TEST_CASE("superposition and inner product") {
    const auto plus = superpose(ket(1, 0), kInvSqrt2, ket(0, 1), kInvSqrt2);
    const auto minus = superpose(ket(1, 0), kInvSqrt2, ket(0, 1), -kInvSqrt2);
    CHECK(std::abs(inner_product(plus, minus)) < 1e-15);
    CHECK(std::abs(inner_product(plus, plus) - 1.0) < 1e-15);
    // <a|i b> = i <a|b>: the bra is conjugated.
    const auto ib = plus.scaled(Amplitude(0.0, 1.0));
    CHECK(std::abs(inner_product(plus, ib) - Amplitude(0.0, 1.0)) < 1e-15);
    CHECK(superpose(ket(1, 0), 1.0, ket(1, 0), -1.0).empty());
}

TEST_CASE("normalize and fidelity") {
    const auto s = superpose(ket(2, 0), 3.0, ket(0, 2), Amplitude(0.0, 4.0));
    const auto n = normalize(s);
    CHECK(n.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(n.amplitude(OccupationVector{2, 0}) - 0.6) < 1e-15);
    CHECK_THROWS_AS(normalize(StateVector(kAB)), DegenerateState);
    // Global phase does not change the fidelity.
    CHECK(fidelity(s, s.scaled(std::polar(1.0, 0.7))) == doctest::Approx(1.0));
    CHECK(fidelity(ket(1, 0), ket(0, 1)) == 0.0);
    CHECK(fidelity(StateVector(kAB), ket(0, 1)) == 0.0);
    CHECK_THROWS_AS(fidelity(ket(1, 0), make_basis_state(ModeRegistry::scalar({"c", "d"}),
                                                         OccupationVector{1, 0})),
                    RegistryMismatch);
}

TEST_CASE("tensor product") {
    const auto c = make_basis_state(ModeRegistry::scalar({"c"}), OccupationVector{3});
    const auto t = tensor(superpose(ket(1, 0), 0.6, ket(0, 1), 0.8), c);
    CHECK(t.registry().size() == 3);
    CHECK(t.amplitude(OccupationVector{1, 0, 3}) == Amplitude(0.6));
    CHECK(t.amplitude(OccupationVector{0, 1, 3}) == Amplitude(0.8));
    CHECK_THROWS(tensor(ket(0, 0), ket(0, 0)));
}

TEST_CASE("renaming and reordering") {
    const auto s = superpose(ket(1, 0), 0.6, ket(0, 1), 0.8);
    const auto r = rename_paths(s, {{"a", "z"}});
    CHECK(r.amplitude({{mode("z"), 1}}) == Amplitude(0.6));

    const auto swapped = reorder_modes(s, ModeRegistry::scalar({"b", "a"}));
    CHECK(swapped.amplitude(OccupationVector{0, 1}) == Amplitude(0.6));
    CHECK(swapped.amplitude({{mode("a"), 1}}) == Amplitude(0.6));

    const auto mode_renamed = rename_modes(s, {{mode("b"), mode("q")}});
    CHECK(mode_renamed.registry().contains(mode("q")));
}

TEST_CASE("discarding vacuum modes") {
    const auto s = superpose(ket(1, 0), 0.6, ket(2, 0), 0.8);
    const auto d = discard_vacuum_modes(s, {mode("b")});
    CHECK(d.registry().size() == 1);
    CHECK(d.amplitude(OccupationVector{2}) == Amplitude(0.8));
    CHECK_THROWS_AS(discard_vacuum_modes(s, {mode("a")}), ContractError);
}

TEST_CASE("occupation vector ordering and totals") {
    const OccupationVector o{2, 0, 1};
    CHECK(o.total() == 3);
    CHECK(o.with(ModeId{1}, 4).total() == 7);
    CHECK(OccupationVector::vacuum(3).total() == 0);
    CHECK(OccupationVector{0, 1} < OccupationVector{1, 0});
}
