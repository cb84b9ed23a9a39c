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
#include "fockline/state.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fockline/errors.hpp"

namespace fockline {

namespace {

void require_same(const StateVector &a, const StateVector &b) {
    if (!same_registry(a.registry_ptr(), b.registry_ptr())) {
        throw RegistryMismatch("states are defined over different registries");
    }
}

double sum_norm(const StateVector::Terms &terms) {
    double s = 0.0;
    for (const auto &[occ, amp] : terms) {
        (void)occ;
        s += std::norm(amp);
    }
    return s;
}

} // namespace

OccupationVector::OccupationVector(std::vector<unsigned> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), 0U)) {}

OccupationVector OccupationVector::vacuum(std::size_t modes) {
    return OccupationVector(std::vector<unsigned>(modes, 0U));
}

OccupationVector OccupationVector::with(ModeId id, unsigned count) const {
    auto counts = counts_;
    counts.at(id.index) = count;
    return OccupationVector(std::move(counts));
}

StateVector::StateVector() : StateVector(ModeRegistry::make({})) {}

StateVector::StateVector(RegistryPtr registry) : registry_(std::move(registry)) {
    if (!registry_) {
        throw ArgumentError("state requires a registry");
    }
}

StateVector::StateVector(RegistryPtr registry, Terms terms)
    : StateVector(std::move(registry)) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != registry_->size()) {
            throw DimensionError("occupation of length " +
                                 std::to_string(it->first.size()) +
                                 " does not match " +
                                 std::to_string(registry_->size()) + " modes");
        }
        it = (it->second == Amplitude{}) ? terms.erase(it) : std::next(it);
    }
    terms_ = std::move(terms);
    norm_sq_ = sum_norm(terms_);
}

Amplitude StateVector::amplitude(const OccupationVector &occ) const {
    if (auto it = terms_.find(occ); it != terms_.end()) {
        return it->second;
    }
    return {};
}

Amplitude StateVector::amplitude(
    std::initializer_list<std::pair<ModeKey, unsigned>> occ) const {
    return amplitude(occupation(*registry_, occ));
}

StateVector StateVector::scaled(Amplitude factor) const {
    Terms out;
    for (const auto &[occ, amp] : terms_) {
        out.emplace(occ, amp * factor);
    }
    return {registry_, std::move(out)};
}

OccupationVector
occupation(const ModeRegistry &registry,
           std::initializer_list<std::pair<ModeKey, unsigned>> occ) {
    std::vector<unsigned> counts(registry.size(), 0U);
    for (const auto &[key, n] : occ) {
        counts[registry.id(key).index] += n;
    }
    return OccupationVector(std::move(counts));
}

StateVector make_basis_state(RegistryPtr registry, const OccupationVector &occ) {
    if (!registry) {
        throw ArgumentError("state requires a registry");
    }
    return {std::move(registry), {{occ, Amplitude{1.0, 0.0}}}};
}

StateVector
make_basis_state(RegistryPtr registry,
                 std::initializer_list<std::pair<ModeKey, unsigned>> occ) {
    auto o = occupation(*registry, occ);
    return make_basis_state(std::move(registry), o);
}

StateVector superpose(const StateVector &a, Amplitude ca, const StateVector &b,
                      Amplitude cb) {
    require_same(a, b);
    StateVector::Terms out;
    for (const auto &[occ, amp] : a.terms()) {
        out[occ] += ca * amp;
    }
    for (const auto &[occ, amp] : b.terms()) {
        out[occ] += cb * amp;
    }
    return {a.registry_ptr(), std::move(out)};
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    require_same(a, b);
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    Amplitude sum{};
    for (const auto &[occ, amp] : small.terms()) {
        const Amplitude other = large.amplitude(occ);
        sum += (&small == &a) ? std::conj(amp) * other : std::conj(other) * amp;
    }
    return sum;
}

double norm_sq(const StateVector &a) { return a.norm_sq(); }

StateVector normalize(const StateVector &a) {
    const double n2 = a.norm_sq();
    if (!(n2 > 1e-24)) {
        throw DegenerateState("cannot normalize a zero state");
    }
    return a.scaled(1.0 / std::sqrt(n2));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    auto registry = ModeRegistry::merged(a.registry(), b.registry());
    StateVector::Terms out;
    for (const auto &[oa, xa] : a.terms()) {
        for (const auto &[ob, xb] : b.terms()) {
            std::vector<unsigned> counts = oa.counts();
            counts.insert(counts.end(), ob.counts().begin(), ob.counts().end());
            out.emplace(OccupationVector(std::move(counts)), xa * xb);
        }
    }
    return {std::move(registry), std::move(out)};
}

double fidelity(const StateVector &a, const StateVector &b) {
    require_same(a, b);
    const double denom = a.norm_sq() * b.norm_sq();
    if (denom == 0.0) {
        return 0.0;
    }
    return std::min(1.0, std::norm(inner_product(a, b)) / denom);
}

StateVector prune(const StateVector &a, double eps) {
    StateVector::Terms out;
    for (const auto &[occ, amp] : a.terms()) {
        if (std::abs(amp) > eps) {
            out.emplace(occ, amp);
        }
    }
    return {a.registry_ptr(), std::move(out)};
}

StateVector relabel(const StateVector &a, RegistryPtr registry) {
    if (!registry || registry->size() != a.registry().size()) {
        throw DimensionError("relabel requires a registry of equal size");
    }
    return {std::move(registry), a.terms()};
}

StateVector rename_paths(const StateVector &a,
                         const std::map<std::string, std::string> &renames) {
    return relabel(a, a.registry().paths_renamed(renames));
}

StateVector rename_modes(const StateVector &a,
                         const std::map<ModeKey, ModeKey> &renames) {
    return relabel(a, a.registry().renamed(renames));
}

StateVector discard_vacuum_modes(const StateVector &a,
                                 const std::vector<ModeKey> &modes) {
    std::set<ModeId> removed;
    for (const auto &key : modes) {
        removed.insert(a.registry().id(key));
    }
    auto registry = a.registry().without(removed);
    StateVector::Terms out;
    for (const auto &[occ, amp] : a.terms()) {
        std::vector<unsigned> counts;
        counts.reserve(registry->size());
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (removed.contains(ModeId{i})) {
                if (occ[i] != 0) {
                    throw ContractError("mode " +
                                        to_string(a.registry().key(ModeId{i})) +
                                        " is expected to be vacuum");
                }
            } else {
                counts.push_back(occ[i]);
            }
        }
        out.emplace(OccupationVector(std::move(counts)), amp);
    }
    return {std::move(registry), std::move(out)};
}

StateVector reorder_modes(const StateVector &a, RegistryPtr target) {
    const auto &source = a.registry();
    if (!target || target->size() != source.size()) {
        throw RegistryMismatch("reorder target has a different mode count");
    }
    std::vector<std::size_t> to(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        auto found = target->find(source.key(ModeId{i}));
        if (!found) {
            throw RegistryMismatch("reorder target lacks mode " +
                                   to_string(source.key(ModeId{i})));
        }
        to[i] = found->index;
    }
    StateVector::Terms out;
    for (const auto &[occ, amp] : a.terms()) {
        std::vector<unsigned> counts(occ.size());
        for (std::size_t i = 0; i < occ.size(); ++i) {
            counts[to[i]] = occ[i];
        }
        out.emplace(OccupationVector(std::move(counts)), amp);
    }
    return {std::move(target), std::move(out)};
}

StateVector map_terms(
    const StateVector &a, RegistryPtr registry,
    const std::function<OccupationVector(const OccupationVector &)> &f) {
    StateVector::Terms out;
    for (const auto &[occ, amp] : a.terms()) {
        out[f(occ)] += amp;
    }
    return {std::move(registry), std::move(out)};
}

} // namespace fockline
