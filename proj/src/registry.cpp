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
#include "fockline/registry.hpp"

#include <algorithm>

#include "fockline/errors.hpp"

namespace fockline {

std::string_view to_string(Polarization pol) {
    switch (pol) {
    case Polarization::H:
        return "H";
    case Polarization::V:
        return "V";
    case Polarization::None:
        break;
    }
    return "none";
}

Polarization polarization_from_string(std::string_view text) {
    if (text == "H" || text == "h") {
        return Polarization::H;
    }
    if (text == "V" || text == "v") {
        return Polarization::V;
    }
    if (text == "none" || text.empty()) {
        return Polarization::None;
    }
    throw ArgumentError("unknown polarization '" + std::string(text) + "'");
}

ModeKey mode(std::string path, Polarization pol) {
    return ModeKey{std::move(path), pol};
}

std::string to_string(const ModeKey &key) {
    if (key.pol == Polarization::None) {
        return key.path;
    }
    return key.path + ":" + std::string(to_string(key.pol));
}

ModeRegistry::ModeRegistry(std::vector<ModeKey> keys) : keys_(std::move(keys)) {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (!index_.emplace(keys_[i], i).second) {
            throw ArgumentError("duplicate mode label " + to_string(keys_[i]));
        }
    }
    validate();
}

void ModeRegistry::validate() const {
    std::map<std::string, std::pair<bool, bool>> kinds; // (scalar, polarized)
    for (const auto &k : keys_) {
        auto &entry = kinds[k.path];
        if (k.pol == Polarization::None) {
            entry.first = true;
        } else {
            entry.second = true;
        }
        if (entry.first && entry.second) {
            throw ArgumentError("path '" + k.path +
                                "' mixes unpolarized and polarized modes");
        }
    }
}

RegistryPtr ModeRegistry::make(std::vector<ModeKey> keys) {
    return RegistryPtr(new ModeRegistry(std::move(keys)));
}

RegistryPtr ModeRegistry::polarized(const std::vector<std::string> &paths) {
    std::vector<ModeKey> keys;
    keys.reserve(2 * paths.size());
    for (const auto &p : paths) {
        keys.push_back({p, Polarization::H});
        keys.push_back({p, Polarization::V});
    }
    return make(std::move(keys));
}

RegistryPtr ModeRegistry::scalar(const std::vector<std::string> &paths) {
    std::vector<ModeKey> keys;
    keys.reserve(paths.size());
    for (const auto &p : paths) {
        keys.push_back({p, Polarization::None});
    }
    return make(std::move(keys));
}

const ModeKey &ModeRegistry::key(ModeId id) const {
    if (id.index >= keys_.size()) {
        throw UnregisteredMode("mode id " + std::to_string(id.index) +
                               " out of range");
    }
    return keys_[id.index];
}

std::optional<ModeId> ModeRegistry::find(const ModeKey &key) const {
    if (auto it = index_.find(key); it != index_.end()) {
        return ModeId{it->second};
    }
    return std::nullopt;
}

ModeId ModeRegistry::id(const ModeKey &key) const {
    if (auto found = find(key)) {
        return *found;
    }
    throw UnregisteredMode("mode " + to_string(key) + " is not registered");
}

bool ModeRegistry::has_path(std::string_view path) const {
    return std::any_of(keys_.begin(), keys_.end(),
                       [&](const ModeKey &k) { return k.path == path; });
}

std::pair<ModeId, ModeId>
ModeRegistry::polarization_modes(const std::string &path) const {
    auto h = find({path, Polarization::H});
    auto v = find({path, Polarization::V});
    if (!h || !v) {
        throw UnregisteredMode("path '" + path +
                               "' has no H/V polarization sub-modes");
    }
    return {*h, *v};
}

std::vector<std::string> ModeRegistry::paths() const {
    std::vector<std::string> out;
    for (const auto &k : keys_) {
        if (std::find(out.begin(), out.end(), k.path) == out.end()) {
            out.push_back(k.path);
        }
    }
    return out;
}

RegistryPtr
ModeRegistry::renamed(const std::map<ModeKey, ModeKey> &renames) const {
    for (const auto &[from, to] : renames) {
        (void)to;
        if (!contains(from)) {
            throw UnregisteredMode("cannot rename unregistered mode " +
                                   to_string(from));
        }
    }
    std::vector<ModeKey> keys = keys_;
    for (auto &k : keys) {
        if (auto it = renames.find(k); it != renames.end()) {
            k = it->second;
        }
    }
    return make(std::move(keys));
}

RegistryPtr ModeRegistry::paths_renamed(
    const std::map<std::string, std::string> &renames) const {
    for (const auto &[from, to] : renames) {
        (void)to;
        if (!has_path(from)) {
            throw UnregisteredMode("cannot rename unregistered path '" + from +
                                   "'");
        }
    }
    std::vector<ModeKey> keys = keys_;
    for (auto &k : keys) {
        if (auto it = renames.find(k.path); it != renames.end()) {
            k.path = it->second;
        }
    }
    return make(std::move(keys));
}

RegistryPtr ModeRegistry::without(const std::set<ModeId> &removed) const {
    std::vector<ModeKey> keys;
    keys.reserve(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (!removed.contains(ModeId{i})) {
            keys.push_back(keys_[i]);
        }
    }
    return make(std::move(keys));
}

RegistryPtr ModeRegistry::merged(const ModeRegistry &a, const ModeRegistry &b) {
    std::vector<ModeKey> keys = a.keys_;
    keys.insert(keys.end(), b.keys_.begin(), b.keys_.end());
    return make(std::move(keys));
}

bool same_registry(const RegistryPtr &a, const RegistryPtr &b) {
    return a == b || (a && b && *a == *b);
}

} // namespace fockline
