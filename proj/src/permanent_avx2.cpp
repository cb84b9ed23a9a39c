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
#include "fockline/permanent_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstdint>

namespace fockline::kernels {

namespace {

// Row sums live in 4-wide blocks of split re/im. Padding rows hold 1+0i and
// padded column entries are 0, so they never change the product.
struct alignas(32) Block {
    double re[4];
    double im[4];
};

} // namespace

__attribute__((target("avx2,fma"))) std::complex<double>
permanent_avx2(std::span<const double> re, std::span<const double> im,
               std::size_t n) {
    if (n == 0) {
        return 1.0;
    }
    const std::size_t blocks = (n + 3) / 4;
    std::vector<Block> cols(blocks * n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < 4 * blocks; ++i) {
            Block &b = cols[c * blocks + i / 4];
            b.re[i % 4] = i < n ? re[c * n + i] : 0.0;
            b.im[i % 4] = i < n ? im[c * n + i] : 0.0;
        }
    }
    std::vector<Block> rows(blocks);
    for (std::size_t i = 0; i < 4 * blocks; ++i) {
        rows[i / 4].re[i % 4] = i < n ? 0.0 : 1.0;
        rows[i / 4].im[i % 4] = 0.0;
    }

    double acc_re = 0.0;
    double acc_im = 0.0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto col = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t gray = k ^ (k >> 1);
        const __m256d dir = _mm256_set1_pd(((gray >> col) & 1U) != 0 ? 1.0 : -1.0);
        const Block *c = cols.data() + col * blocks;

        __m256d p_re = _mm256_set1_pd(1.0);
        __m256d p_im = _mm256_setzero_pd();
        for (std::size_t b = 0; b < blocks; ++b) {
            __m256d r_re = _mm256_fmadd_pd(dir, _mm256_load_pd(c[b].re),
                                           _mm256_load_pd(rows[b].re));
            __m256d r_im = _mm256_fmadd_pd(dir, _mm256_load_pd(c[b].im),
                                           _mm256_load_pd(rows[b].im));
            _mm256_store_pd(rows[b].re, r_re);
            _mm256_store_pd(rows[b].im, r_im);
            const __m256d t = _mm256_fmsub_pd(p_re, r_re, _mm256_mul_pd(p_im, r_im));
            p_im = _mm256_fmadd_pd(p_re, r_im, _mm256_mul_pd(p_im, r_re));
            p_re = t;
        }
        alignas(32) double lane_re[4];
        alignas(32) double lane_im[4];
        _mm256_store_pd(lane_re, p_re);
        _mm256_store_pd(lane_im, p_im);
        double q_re = lane_re[0];
        double q_im = lane_im[0];
        for (int l = 1; l < 4; ++l) {
            const double t = q_re * lane_re[l] - q_im * lane_im[l];
            q_im = q_re * lane_im[l] + q_im * lane_re[l];
            q_re = t;
        }
        if ((std::popcount(gray) & 1) != 0) {
            acc_re -= q_re;
            acc_im -= q_im;
        } else {
            acc_re += q_re;
            acc_im += q_im;
        }
    }
    if ((n & 1U) != 0) {
        acc_re = -acc_re;
        acc_im = -acc_im;
    }
    return {acc_re, acc_im};
}

} // namespace fockline::kernels

#endif
