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
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "fockline/errors.hpp"
#include "fockline/permanent_kernels.hpp"

namespace fockline::kernels {

std::string_view to_string(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

Isa preferred_isa() {
    if (const char *env = std::getenv("FOCKLINE_ISA")) {
        const std::string_view want(env);
        if (want == "scalar") {
            return Isa::Scalar;
        }
        if (want == "avx2" && isa_available(Isa::Avx2)) {
            return Isa::Avx2;
        }
    }
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
    if (isa_available(Isa::Avx2)) {
        out.push_back(Isa::Avx2);
    }
    return out;
}

std::complex<double> permanent_scalar(std::span<const double> re,
                                      std::span<const double> im,
                                      std::size_t n) {
    if (n == 0) {
        return 1.0;
    }
    std::vector<double> row_re(n, 0.0);
    std::vector<double> row_im(n, 0.0);
    double acc_re = 0.0;
    double acc_im = 0.0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto col = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t gray = k ^ (k >> 1);
        const double dir = ((gray >> col) & 1U) != 0 ? 1.0 : -1.0;
        const double *c_re = re.data() + col * n;
        const double *c_im = im.data() + col * n;
        for (std::size_t i = 0; i < n; ++i) {
            row_re[i] += dir * c_re[i];
            row_im[i] += dir * c_im[i];
        }
        double p_re = row_re[0];
        double p_im = row_im[0];
        for (std::size_t i = 1; i < n; ++i) {
            const double t = p_re * row_re[i] - p_im * row_im[i];
            p_im = p_re * row_im[i] + p_im * row_re[i];
            p_re = t;
        }
        if ((std::popcount(gray) & 1) != 0) {
            acc_re -= p_re;
            acc_im -= p_im;
        } else {
            acc_re += p_re;
            acc_im += p_im;
        }
    }
    if ((n & 1U) != 0) {
        acc_re = -acc_re;
        acc_im = -acc_im;
    }
    return {acc_re, acc_im};
}

std::complex<double> permanent(std::span<const double> re,
                               std::span<const double> im, std::size_t n,
                               Isa isa) {
    if (re.size() != n * n || im.size() != n * n) {
        throw DimensionError("permanent kernel expects n*n entries");
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) {
        return permanent_avx2(re, im, n);
    }
#else
    (void)isa;
#endif
    return permanent_scalar(re, im, n);
}

} // namespace fockline::kernels
