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
#include "fockline/detection.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "fockline/errors.hpp"

namespace fockline {

std::string to_string(const DetectionPattern &pattern) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto &[key, n] : pattern) {
        os << (first ? "" : ", ") << to_string(key) << '=' << n;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

struct Split {
    std::vector<std::size_t> detected;
    std::vector<std::size_t> kept;
    RegistryPtr remaining;
};

Split split_modes(const ModeRegistry &registry,
                  const std::vector<ModeKey> &measured) {
    std::set<ModeId> ids;
    for (const auto &key : measured) {
        ids.insert(registry.id(key));
    }
    Split s;
    for (std::size_t i = 0; i < registry.size(); ++i) {
        (ids.contains(ModeId{i}) ? s.detected : s.kept).push_back(i);
    }
    s.remaining = registry.without(ids);
    return s;
}

OccupationVector restrict(const OccupationVector &occ,
                          const std::vector<std::size_t> &modes) {
    std::vector<unsigned> counts;
    counts.reserve(modes.size());
    for (auto i : modes) {
        counts.push_back(occ[i]);
    }
    return OccupationVector(std::move(counts));
}

Branch make_branch(DetectionPattern pattern, StateVector::Terms terms,
                   RegistryPtr remaining) {
    StateVector raw(std::move(remaining), std::move(terms));
    Branch b{std::move(pattern), raw.norm_sq(), raw, std::sqrt(raw.norm_sq())};
    b.conditional_state = raw.norm_sq() > 1e-24
                              ? normalize(raw)
                              : StateVector(raw.registry_ptr());
    return b;
}

} // namespace

Branch project(const StateVector &state, const DetectionPattern &pattern) {
    std::vector<ModeKey> measured;
    for (const auto &[key, n] : pattern) {
        (void)n;
        measured.push_back(key);
    }
    const auto split = split_modes(state.registry(), measured);
    // Required counts in `split.detected` order.
    std::vector<unsigned> required;
    for (auto i : split.detected) {
        required.push_back(pattern.at(state.registry().key(ModeId{i})));
    }
    const OccupationVector want(std::move(required));

    StateVector::Terms terms;
    for (const auto &[occ, amp] : state.terms()) {
        if (restrict(occ, split.detected) == want) {
            terms.emplace(restrict(occ, split.kept), amp);
        }
    }
    return make_branch(pattern, std::move(terms), split.remaining);
}

std::vector<Branch> outcome_distribution(const StateVector &state,
                                         const std::vector<ModeKey> &measured) {
    const auto split = split_modes(state.registry(), measured);
    std::map<OccupationVector, StateVector::Terms> groups;
    for (const auto &[occ, amp] : state.terms()) {
        groups[restrict(occ, split.detected)].emplace(restrict(occ, split.kept),
                                                      amp);
    }
    if (groups.empty()) {
        groups[OccupationVector::vacuum(split.detected.size())];
    }
    std::vector<Branch> branches;
    branches.reserve(groups.size());
    for (auto &[counts, terms] : groups) {
        DetectionPattern pattern;
        for (std::size_t k = 0; k < split.detected.size(); ++k) {
            pattern[state.registry().key(ModeId{split.detected[k]})] = counts[k];
        }
        branches.push_back(
            make_branch(std::move(pattern), std::move(terms), split.remaining));
    }
    return branches;
}

Branch apply_feed_forward(const Branch &branch, const FeedForwardRule &rule) {
    const auto it = rule.corrections.find(branch.pattern);
    if (it == rule.corrections.end()) {
        throw UnhandledHerald("no feed-forward rule for herald " +
                              to_string(branch.pattern));
    }
    Branch out = branch;
    out.conditional_state = apply_elements(branch.conditional_state, it->second);
    return out;
}

} // namespace fockline
