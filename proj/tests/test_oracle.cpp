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
#include <algorithm>

#include <doctest.h>

#include "fockline/elements.hpp"
#include "fockline/equivalence.hpp"
#include "fockline/oracle.hpp"
#include "fockline/random.hpp"
#include "support.hpp"

using namespace fockline;
using fockline::testing::kInvSqrt2;
using fockline::testing::max_abs_diff;

TEST_CASE("Hong-Ou-Mandel amplitudes from the permanent") {
    const ComplexMatrix u = TwoModeUnitary::symmetric_bs().matrix();
    const OccupationVector in{1, 1};
    CHECK(std::abs(oracle::amplitude_via_permanent(u, in, OccupationVector{1, 1})) < 1e-15);
    CHECK(std::abs(oracle::amplitude_via_permanent(u, in, OccupationVector{2, 0}) - kInvSqrt2) <
          1e-15);
    CHECK(std::abs(oracle::amplitude_via_permanent(u, in, OccupationVector{0, 2}) + kInvSqrt2) <
          1e-15);
    CHECK(oracle::amplitude_via_permanent(u, in, OccupationVector{0, 1}) == Amplitude(0.0));
}

TEST_CASE("occupation enumeration") {
    const auto occs = oracle::occupations_with_total(4, 3);
    CHECK(occs.size() == 20);
    for (const auto &o : occs) {
        CHECK(o.total() == 3);
    }
    CHECK(std::is_sorted(occs.begin(), occs.end()));
    CHECK(oracle::occupations_with_total(3, 0).size() == 1);
}

TEST_CASE("engine and oracle agree on seeded random circuits") {
    auto rng = random::make_rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = random::random_circuit(rng);
        const auto engine =
            apply_elements(make_basis_state(c.registry, c.input), c.elements);
        const auto u = circuit_mode_unitary(c.elements, c.registry);
        const auto reference =
            reorder_modes(oracle::evolve_basis_state(u, engine.registry_ptr(),
                                                     c.input),
                          engine.registry_ptr());
        CAPTURE(trial);
        CHECK(max_abs_diff(engine, reference) < 1e-10);
    }
}

TEST_CASE("equivalence trials are reproducible and thread-count independent") {
    const auto a = oracle::run_equivalence_trial(5, 17);
    const auto b = oracle::run_equivalence_trial(5, 17);
    CHECK(a.max_amplitude_error == b.max_amplitude_error);
    CHECK(a.elements == b.elements);

    const auto one = oracle::run_equivalence_suite(5, 30, 1);
    const auto many = oracle::run_equivalence_suite(5, 30, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].index == i);
        CHECK(one[i].max_amplitude_error == many[i].max_amplitude_error);
        CHECK(one[i].completeness_error == many[i].completeness_error);
        CHECK(one[i].matched());
    }
}

TEST_CASE("random unitaries are unitary") {
    auto rng = random::make_rng(3);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(is_unitary(random::random_unitary(n, rng), 1e-12));
    }
}
