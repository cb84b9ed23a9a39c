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
#include "fockline/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "fockline/detection.hpp"
#include "fockline/oracle.hpp"

namespace fockline::oracle {

EquivalenceTrial run_equivalence_trial(std::uint64_t seed, std::size_t index,
                                       const random::CircuitLimits &limits) {
    auto rng = random::make_rng(seed, index);
    const auto circuit = random::random_circuit(rng, limits);

    EquivalenceTrial t;
    t.index = index;
    t.modes = circuit.registry->size();
    t.photons = circuit.input.total();
    t.elements = circuit.elements.size();

    StateVector state = make_basis_state(circuit.registry, circuit.input);
    for (const auto &e : circuit.elements) {
        state = apply_element(state, e);
        t.max_norm_drift = std::max(t.max_norm_drift, std::abs(state.norm_sq() - 1.0));
    }
    for (const auto &[occ, amp] : state.terms()) {
        (void)amp;
        t.photon_number_conserved = t.photon_number_conserved && occ.total() == t.photons;
    }

    const ComplexMatrix u = circuit_mode_unitary(circuit.elements, circuit.registry);
    for (const auto &out : occupations_with_total(t.modes, t.photons)) {
        const Amplitude expected = amplitude_via_permanent(u, circuit.input, out);
        t.max_amplitude_error =
            std::max(t.max_amplitude_error, std::abs(state.amplitude(out) - expected));
    }

    std::vector<ModeKey> measured;
    for (const auto &k : state.registry().keys()) {
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
            measured.push_back(k);
        }
    }
    double total = 0.0;
    for (const auto &b : outcome_distribution(state, measured)) {
        total += b.probability;
    }
    t.completeness_error = std::abs(total - state.norm_sq());
    return t;
}

std::vector<EquivalenceTrial>
run_equivalence_suite(std::uint64_t seed, std::size_t count, std::size_t threads,
                      const random::CircuitLimits &limits) {
    std::vector<EquivalenceTrial> trials(count);
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, std::max<std::size_t>(count, 1));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                trials[i] = run_equivalence_trial(seed, i, limits);
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < threads; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return trials;
}

} // namespace fockline::oracle
