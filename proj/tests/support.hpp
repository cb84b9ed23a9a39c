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
#pragma once

#include <cmath>
#include <complex>

#include <doctest.h>

#include "fockline/state.hpp"

namespace fockline::testing {

inline void check_close(Amplitude a, Amplitude b, double tol = 1e-12) {
    CHECK(std::abs(a - b) <= tol);
}

inline double max_abs_diff(const StateVector &a, const StateVector &b) {
    double worst = 0.0;
    for (const auto &[occ, amp] : a.terms()) {
        worst = std::max(worst, std::abs(amp - b.amplitude(occ)));
    }
    for (const auto &[occ, amp] : b.terms()) {
        worst = std::max(worst, std::abs(amp - a.amplitude(occ)));
    }
    return worst;
}

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace fockline::testing
