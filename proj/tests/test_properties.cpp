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
#include <set>

#include <doctest.h>

#include "fockline/detection.hpp"
#include "fockline/elements.hpp"
#include "fockline/random.hpp"
#include "support.hpp"

using namespace fockline;
using fockline::testing::max_abs_diff;

namespace {

constexpr int kCases = 1000;

struct Case {
    random::RandomCircuit circuit;
    StateVector s;
    StateVector t;
    Amplitude a;
    Amplitude b;
};

Case make_case(int index) {
    auto rng = random::make_rng(2024, static_cast<std::uint64_t>(index));
    Case c;
    c.circuit = random::random_circuit(rng, {2, 4, 3, 4});
    c.s = random::random_state(c.circuit.registry, 3, 5, rng);
    c.t = random::random_state(c.circuit.registry, 3, 5, rng);
    c.a = random::gaussian(rng);
    c.b = random::gaussian(rng);
    return c;
}

} // namespace

TEST_CASE("circuits act linearly") {
    for (int i = 0; i < kCases; ++i) {
        const auto c = make_case(i);
        const auto &el = c.circuit.elements;
        const auto lhs = apply_elements(superpose(c.s, c.a, c.t, c.b), el);
        const auto rhs =
            superpose(apply_elements(c.s, el), c.a, apply_elements(c.t, el), c.b);
        CAPTURE(i);
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("circuits preserve inner products and photon number") {
    for (int i = 0; i < kCases; ++i) {
        const auto c = make_case(i);
        const auto us = apply_elements(c.s, c.circuit.elements);
        const auto ut = apply_elements(c.t, c.circuit.elements);
        CAPTURE(i);
        CHECK(std::abs(inner_product(us, ut) - inner_product(c.s, c.t)) < 1e-12);
        CHECK(std::abs(us.norm_sq() - 1.0) < 1e-12);

        std::set<unsigned> before;
        for (const auto &[occ, amp] : c.s.terms()) {
            before.insert(occ.total());
        }
        for (const auto &[occ, amp] : us.terms()) {
            CHECK(before.count(occ.total()) == 1);
        }
    }
}

TEST_CASE("outcome probabilities are complete") {
    for (int i = 0; i < kCases; ++i) {
        const auto c = make_case(i);
        const auto out = apply_elements(c.s, c.circuit.elements);
        std::vector<ModeKey> measured;
        const auto &keys = out.registry().keys();
        for (std::size_t k = 0; k < keys.size(); k += 2) {
            measured.push_back(keys[k]);
        }
        double total = 0.0;
        for (const auto &b : outcome_distribution(out, measured)) {
            total += b.probability;
        }
        CAPTURE(i);
        CHECK(std::abs(total - out.norm_sq()) < 1e-12);
    }
}

TEST_CASE("self-inverse elements") {
    for (int i = 0; i < kCases; ++i) {
        auto rng = random::make_rng(77, static_cast<std::uint64_t>(i));
        const auto reg = ModeRegistry::polarized({"a", "b"});
        const auto s = random::random_state(reg, 4, 6, rng);
        CAPTURE(i);
        CHECK(max_abs_diff(apply_hwp(apply_hwp(s, "a", HwpVariant::HWP90), "a",
                                     HwpVariant::HWP90),
                           s) < 1e-13);
        CHECK(max_abs_diff(apply_hwp(apply_hwp(s, "b", HwpVariant::HWP45), "b",
                                     HwpVariant::HWP45),
                           s) < 1e-12);
        const ModeId ah{0};
        const ModeId bv{3};
        CHECK(max_abs_diff(apply_symmetric_bs(apply_symmetric_bs(s, ah, bv), ah, bv), s) <
              1e-12);
        CHECK(max_abs_diff(apply_pbs(apply_pbs(s, "a", "b", "x", "y"), "x", "y", "a", "b"),
                           s) < 1e-15);
    }
}
