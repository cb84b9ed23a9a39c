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
 * Ryser permanent kernels: a scalar reference and SIMD variants selected
 * at runtime. All variants evaluate the same Gray-code ordered sum and
 * differ only in floating-point association inside the row product.
 *
 * Matrices are passed column-major as split real / imaginary arrays of
 * length n*n.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace fockline::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Whether the running CPU (and this build) can execute `isa`.
bool isa_available(Isa isa);

/// Widest available ISA. The FOCKLINE_ISA environment variable
/// ("scalar" or "avx2") overrides the choice when that ISA is available.
Isa preferred_isa();

/// ISAs usable on this host, scalar first.
std::vector<Isa> available_isas();

std::complex<double> permanent_scalar(std::span<const double> re,
                                      std::span<const double> im,
                                      std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
std::complex<double> permanent_avx2(std::span<const double> re,
                                    std::span<const double> im,
                                    std::size_t n);
#endif

/// Dispatches to the requested kernel; falls back to scalar when `isa` is
/// not available.
std::complex<double> permanent(std::span<const double> re,
                               std::span<const double> im, std::size_t n,
                               Isa isa);

} // namespace fockline::kernels
