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
#include <numeric>
#include <vector>

#include <doctest.h>

#include "fockline/errors.hpp"
#include "fockline/oracle.hpp"
#include "fockline/permanent_kernels.hpp"
#include "fockline/random.hpp"

using namespace fockline;

namespace {

// Definition of the permanent as a sum over permutations.
Amplitude permanent_by_definition(const ComplexMatrix &m) {
    const auto n = static_cast<int>(m.rows());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Amplitude total = 0.0;
    do {
        Amplitude prod = 1.0;
        for (int i = 0; i < n; ++i) {
            prod *= m(i, perm[static_cast<std::size_t>(i)]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? Amplitude(1.0) : total;
}

ComplexMatrix random_matrix(std::size_t n, random::Rng &rng) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = random::gaussian(rng);
        }
    }
    return m;
}

std::pair<std::vector<double>, std::vector<double>> split(const ComplexMatrix &m) {
    std::vector<double> re;
    std::vector<double> im;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            re.push_back(m(i, j).real());
            im.push_back(m(i, j).imag());
        }
    }
    return {re, im};
}

} // namespace

TEST_CASE("known permanents") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const ComplexMatrix ones = ComplexMatrix::Ones(n, n);
        double fact = 1.0;
        for (std::size_t k = 2; k <= n; ++k) {
            fact *= static_cast<double>(k);
        }
        CHECK(std::abs(oracle::permanent(ones) - fact) < 1e-9 * fact);
    }
    ComplexMatrix m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    CHECK(std::abs(oracle::permanent(m) - 10.0) < 1e-14);
    CHECK(oracle::permanent(ComplexMatrix(0, 0)) == Amplitude(1.0));
}

TEST_CASE("Ryser matches the permutation sum") {
    auto rng = random::make_rng(11);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto m = random_matrix(n, rng);
            const auto expected = permanent_by_definition(m);
            CHECK(std::abs(oracle::permanent(m) - expected) < 1e-10 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("permanent argument checks") {
    CHECK_THROWS_AS(oracle::permanent(ComplexMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(oracle::permanent(ComplexMatrix::Ones(17, 17)), DimensionError);
}

TEST_CASE("every available kernel agrees with the scalar reference") {
    auto rng = random::make_rng(23);
    const auto isas = kernels::available_isas();
    REQUIRE_FALSE(isas.empty());
    CHECK(isas.front() == kernels::Isa::Scalar);
    for (std::size_t n = 1; n <= 13; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
            const auto m = random_matrix(n, rng);
            const auto [re, im] = split(m);
            const auto ref = kernels::permanent_scalar(re, im, n);
            for (const auto isa : isas) {
                CAPTURE(n);
                CAPTURE(kernels::to_string(isa));
                const auto got = kernels::permanent(re, im, n, isa);
                CHECK(std::abs(got - ref) <= 1e-11 * (1.0 + std::abs(ref)));
                CHECK(std::abs(oracle::permanent(m, isa) - ref) <=
                      1e-11 * (1.0 + std::abs(ref)));
            }
        }
    }
}

TEST_CASE("kernel dispatch") {
    CHECK(kernels::isa_available(kernels::Isa::Scalar));
    CHECK(kernels::isa_available(kernels::preferred_isa()));
    CHECK(kernels::to_string(kernels::Isa::Avx2) == "avx2");
    std::vector<double> re(4, 1.0);
    std::vector<double> im(4, 0.0);
    CHECK_THROWS_AS(kernels::permanent(re, im, 3, kernels::Isa::Scalar), DimensionError);
}
