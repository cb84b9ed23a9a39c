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
 * Mode bookkeeping: maps physical mode labels (spatial path plus optional
 * polarization) onto dense mode indices.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fockline {

enum class Polarization { None, H, V };

std::string_view to_string(Polarization pol);
Polarization polarization_from_string(std::string_view text);

/// Dense index of a mode inside one registry.
struct ModeId {
    std::size_t index{};
    auto operator<=>(const ModeId &) const = default;
};

/// Physical label of a mode: spatial path and polarization sub-mode.
struct ModeKey {
    std::string path;
    Polarization pol{Polarization::None};

    auto operator<=>(const ModeKey &) const = default;
};

ModeKey mode(std::string path, Polarization pol = Polarization::None);
std::string to_string(const ModeKey &key);

class ModeRegistry;
using RegistryPtr = std::shared_ptr<const ModeRegistry>;

/**
 * Immutable injective table of mode labels. Every operation that changes
 * the mode set returns a new registry.
 *
 * A spatial path either has a single unpolarized mode or an H and/or V
 * sub-mode, never both kinds.
 */
class ModeRegistry {
  public:
    static RegistryPtr make(std::vector<ModeKey> keys);

    /// Registry holding H and V sub-modes for each listed path, in order.
    static RegistryPtr polarized(const std::vector<std::string> &paths);
    /// Registry holding one unpolarized mode per listed path.
    static RegistryPtr scalar(const std::vector<std::string> &paths);

    [[nodiscard]] std::size_t size() const noexcept { return keys_.size(); }
    [[nodiscard]] const std::vector<ModeKey> &keys() const noexcept {
        return keys_;
    }
    [[nodiscard]] const ModeKey &key(ModeId id) const;

    [[nodiscard]] std::optional<ModeId> find(const ModeKey &key) const;
    /// Throws UnregisteredMode if absent.
    [[nodiscard]] ModeId id(const ModeKey &key) const;
    [[nodiscard]] bool contains(const ModeKey &key) const {
        return find(key).has_value();
    }
    [[nodiscard]] bool has_path(std::string_view path) const;

    /// H and V sub-modes of a path. Throws UnregisteredMode unless both exist.
    [[nodiscard]] std::pair<ModeId, ModeId>
    polarization_modes(const std::string &path) const;

    /// Distinct spatial paths in first-appearance order.
    [[nodiscard]] std::vector<std::string> paths() const;

    /// Same ids, keys replaced according to `renames` (applied
    /// simultaneously). The result must still be injective.
    [[nodiscard]] RegistryPtr
    renamed(const std::map<ModeKey, ModeKey> &renames) const;
    /// Same ids; every sub-mode of each path in `renames` is moved to the
    /// new path label.
    [[nodiscard]] RegistryPtr
    paths_renamed(const std::map<std::string, std::string> &renames) const;

    /// Registry with the given modes removed and the remaining ids
    /// re-densified in their original order.
    [[nodiscard]] RegistryPtr without(const std::set<ModeId> &removed) const;

    /// Concatenation; label sets must be disjoint.
    [[nodiscard]] static RegistryPtr merged(const ModeRegistry &a,
                                            const ModeRegistry &b);

    bool operator==(const ModeRegistry &other) const = default;

  private:
    explicit ModeRegistry(std::vector<ModeKey> keys);
    void validate() const;

    std::vector<ModeKey> keys_;
    std::map<ModeKey, std::size_t> index_;
};

/// True when both pointers denote equal registries.
bool same_registry(const RegistryPtr &a, const RegistryPtr &b);

} // namespace fockline
