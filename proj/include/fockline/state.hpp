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
 * Sparse multimode Fock-state vectors.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "fockline/registry.hpp"

namespace fockline {

using Amplitude = std::complex<double>;

/// Photon counts per mode; one Fock basis label.
class OccupationVector {
  public:
    OccupationVector() = default;
    explicit OccupationVector(std::vector<unsigned> counts);
    OccupationVector(std::initializer_list<unsigned> counts)
        : OccupationVector(std::vector<unsigned>(counts)) {}
    /// All-zero vector with `modes` entries.
    static OccupationVector vacuum(std::size_t modes);

    [[nodiscard]] std::size_t size() const noexcept { return counts_.size(); }
    [[nodiscard]] unsigned total() const noexcept { return total_; }
    [[nodiscard]] unsigned operator[](std::size_t i) const {
        return counts_[i];
    }
    [[nodiscard]] unsigned at(ModeId id) const { return counts_.at(id.index); }
    [[nodiscard]] const std::vector<unsigned> &counts() const noexcept {
        return counts_;
    }

    [[nodiscard]] OccupationVector with(ModeId id, unsigned count) const;

    bool operator==(const OccupationVector &o) const {
        return counts_ == o.counts_;
    }
    auto operator<=>(const OccupationVector &o) const {
        return counts_ <=> o.counts_;
    }

  private:
    std::vector<unsigned> counts_;
    unsigned total_{0};
};

/**
 * Immutable sparse superposition of Fock basis states over one registry.
 *
 * Terms whose amplitude is exactly zero are never stored; near-zero terms
 * are kept until an explicit prune().
 */
class StateVector {
  public:
    using Terms = std::map<OccupationVector, Amplitude>;

    /// Zero state over an empty registry.
    StateVector();
    /// Empty (zero) state over `registry`.
    explicit StateVector(RegistryPtr registry);
    /// Throws DimensionError if any key length differs from the registry.
    StateVector(RegistryPtr registry, Terms terms);

    [[nodiscard]] const ModeRegistry &registry() const { return *registry_; }
    [[nodiscard]] const RegistryPtr &registry_ptr() const noexcept {
        return registry_;
    }
    [[nodiscard]] const Terms &terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] double norm_sq() const noexcept { return norm_sq_; }

    /// Amplitude of a basis label; zero when absent.
    [[nodiscard]] Amplitude amplitude(const OccupationVector &occ) const;
    /// Amplitude of the basis state given as (mode label, count) pairs,
    /// unlisted modes empty.
    [[nodiscard]] Amplitude
    amplitude(std::initializer_list<std::pair<ModeKey, unsigned>> occ) const;

    [[nodiscard]] StateVector scaled(Amplitude factor) const;

  private:
    RegistryPtr registry_;
    Terms terms_;
    double norm_sq_{0.0};
};

StateVector make_basis_state(RegistryPtr registry, const OccupationVector &occ);
/// Basis state from (mode label, count) pairs; unlisted modes are empty.
StateVector
make_basis_state(RegistryPtr registry,
                 std::initializer_list<std::pair<ModeKey, unsigned>> occ);
OccupationVector
occupation(const ModeRegistry &registry,
           std::initializer_list<std::pair<ModeKey, unsigned>> occ);

StateVector superpose(const StateVector &a, Amplitude ca, const StateVector &b,
                      Amplitude cb);
Amplitude inner_product(const StateVector &a, const StateVector &b);
double norm_sq(const StateVector &a);
/// Throws DegenerateState when norm² <= 1e-24.
StateVector normalize(const StateVector &a);
/// Product state over the merged registry (a's modes first).
StateVector tensor(const StateVector &a, const StateVector &b);
/// |<a|b>|² / (<a|a><b|b>); zero if either state is zero.
double fidelity(const StateVector &a, const StateVector &b);
/// Drops terms with |amplitude| <= eps.
StateVector prune(const StateVector &a, double eps);

/// Re-keys the state onto a registry with the same ids but new labels.
StateVector relabel(const StateVector &a, RegistryPtr registry);
StateVector rename_paths(const StateVector &a,
                         const std::map<std::string, std::string> &renames);
StateVector rename_modes(const StateVector &a,
                         const std::map<ModeKey, ModeKey> &renames);
/// Removes modes that are empty in every term. Throws ContractError if any
/// listed mode is occupied.
StateVector discard_vacuum_modes(const StateVector &a,
                                 const std::vector<ModeKey> &modes);
/// Same state expressed over `target`, which must hold exactly the same
/// mode labels in any order.
StateVector reorder_modes(const StateVector &a, RegistryPtr target);
/// Maps each term's occupation through `f`, summing collisions. Used by
/// element implementations that permute modes.
StateVector map_terms(
    const StateVector &a, RegistryPtr registry,
    const std::function<OccupationVector(const OccupationVector &)> &f);

} // namespace fockline
