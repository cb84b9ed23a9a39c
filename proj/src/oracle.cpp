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
#include "fockline/oracle.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "fockline/errors.hpp"

namespace fockline::oracle {

namespace {

double factorial(unsigned n) {
    double f = 1.0;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

std::vector<Eigen::Index> expand(const OccupationVector &occ) {
    std::vector<Eigen::Index> idx;
    for (std::size_t m = 0; m < occ.size(); ++m) {
        for (unsigned k = 0; k < occ[m]; ++k) {
            idx.push_back(static_cast<Eigen::Index>(m));
        }
    }
    return idx;
}

} // namespace

Amplitude permanent(const ComplexMatrix &m, kernels::Isa isa) {
    if (m.rows() != m.cols()) {
        throw DimensionError("permanent of a non-square matrix");
    }
    const auto n = static_cast<std::size_t>(m.rows());
    if (n > kMaxPermanentSize) {
        throw DimensionError("permanent limited to " +
                             std::to_string(kMaxPermanentSize) + " rows");
    }
    std::vector<double> re(n * n);
    std::vector<double> im(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            const auto z = m(static_cast<Eigen::Index>(r),
                             static_cast<Eigen::Index>(c));
            re[c * n + r] = z.real();
            im[c * n + r] = z.imag();
        }
    }
    return kernels::permanent(re, im, n, isa);
}

Amplitude permanent(const ComplexMatrix &m) {
    static const kernels::Isa isa = kernels::preferred_isa();
    return permanent(m, isa);
}

Amplitude amplitude_via_permanent(const ComplexMatrix &u,
                                  const OccupationVector &input,
                                  const OccupationVector &output) {
    if (input.size() != output.size() ||
        static_cast<Eigen::Index>(input.size()) != u.rows() ||
        u.rows() != u.cols()) {
        throw DimensionError("occupations do not match the unitary size");
    }
    if (input.total() != output.total()) {
        return {};
    }
    const auto cols = expand(input);
    const auto rows = expand(output);
    const auto n = static_cast<Eigen::Index>(cols.size());
    ComplexMatrix sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            sub(r, c) = u(rows[static_cast<std::size_t>(r)],
                          cols[static_cast<std::size_t>(c)]);
        }
    }
    double norm = 1.0;
    for (std::size_t m = 0; m < input.size(); ++m) {
        norm *= factorial(input[m]) * factorial(output[m]);
    }
    return permanent(sub) / std::sqrt(norm);
}

std::vector<OccupationVector> occupations_with_total(std::size_t modes,
                                                     unsigned photons) {
    std::vector<OccupationVector> out;
    if (modes == 0) {
        if (photons == 0) {
            out.push_back(OccupationVector::vacuum(0));
        }
        return out;
    }
    std::vector<unsigned> counts(modes, 0U);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t m,
                                                          unsigned left) {
        if (m + 1 == modes) {
            counts[m] = left;
            out.emplace_back(counts);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            counts[m] = k;
            fill(m + 1, left - k);
        }
    };
    fill(0, photons);
    return out;
}

StateVector evolve_basis_state(const ComplexMatrix &u, RegistryPtr registry,
                               const OccupationVector &input) {
    StateVector::Terms terms;
    for (const auto &out : occupations_with_total(input.size(), input.total())) {
        terms.emplace(out, amplitude_via_permanent(u, input, out));
    }
    return {std::move(registry), std::move(terms)};
}

} // namespace fockline::oracle
