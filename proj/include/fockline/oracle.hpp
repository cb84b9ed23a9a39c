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
 * Transition amplitudes from matrix permanents. Shares no arithmetic with
 * the binomial expansion in elements.cpp and serves as its cross-check.
 */
#pragma once

#include <cstddef>

#include "fockline/elements.hpp"
#include "fockline/permanent_kernels.hpp"
#include "fockline/state.hpp"

namespace fockline::oracle {

inline constexpr std::size_t kMaxPermanentSize = 16;

/// Ryser permanent. Throws DimensionError for non-square or n > 16.
Amplitude permanent(const ComplexMatrix &m);
Amplitude permanent(const ComplexMatrix &m, kernels::Isa isa);

/**
 * <output| U |input> for an M-mode interferometer U in the convention
 * a†(j) -> sum_i U(i,j) b†(i):
 *
 *     Per(U[rows by output counts, cols by input counts]) /
 *         sqrt(prod n_i! prod m_j!)
 *
 * Returns zero when photon numbers differ.
 */
Amplitude amplitude_via_permanent(const ComplexMatrix &u,
                                  const OccupationVector &input,
                                  const OccupationVector &output);

/// Output state of a basis input, evaluated amplitude by amplitude over all
/// occupations with the same photon number.
StateVector evolve_basis_state(const ComplexMatrix &u, RegistryPtr registry,
                               const OccupationVector &input);

/// All occupation vectors of `modes` modes carrying `photons` photons, in
/// lexicographic order.
std::vector<OccupationVector> occupations_with_total(std::size_t modes,
                                                     unsigned photons);

} // namespace fockline::oracle
