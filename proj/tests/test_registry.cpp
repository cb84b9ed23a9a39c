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
#include <doctest.h>

#include "fockline/errors.hpp"
#include "fockline/registry.hpp"

using namespace fockline;

TEST_CASE("polarized registry lays out H before V per path") {
    const auto reg = ModeRegistry::polarized({"a", "b"});
    REQUIRE(reg->size() == 4);
    CHECK(reg->id(mode("a", Polarization::H)).index == 0);
    CHECK(reg->id(mode("a", Polarization::V)).index == 1);
    CHECK(reg->id(mode("b", Polarization::H)).index == 2);
    CHECK(reg->id(mode("b", Polarization::V)).index == 3);
    const auto [h, v] = reg->polarization_modes("b");
    CHECK(h.index == 2);
    CHECK(v.index == 3);
    CHECK(reg->paths() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("registry validation") {
    CHECK_THROWS_AS((void)ModeRegistry::make({mode("a"), mode("a")}), ArgumentError);
    CHECK_THROWS_AS((void)ModeRegistry::make({mode("a"), mode("a", Polarization::H)}),
                    ArgumentError);
    const auto reg = ModeRegistry::scalar({"x"});
    CHECK_THROWS_AS((void)reg->id(mode("y")), UnregisteredMode);
    CHECK_FALSE(reg->contains(mode("x", Polarization::H)));
}

TEST_CASE("renaming keeps ids and rejects collisions") {
    const auto reg = ModeRegistry::polarized({"a", "b"});
    const auto renamed = reg->paths_renamed({{"a", "c"}});
    CHECK(renamed->key(ModeId{0}) == mode("c", Polarization::H));
    CHECK(renamed->key(ModeId{2}) == mode("b", Polarization::H));
    CHECK_THROWS((void)reg->paths_renamed({{"a", "b"}}));
    CHECK_THROWS_AS((void)reg->paths_renamed({{"z", "q"}}), UnregisteredMode);
}

TEST_CASE("merge and removal") {
    const auto a = ModeRegistry::scalar({"1", "2"});
    const auto b = ModeRegistry::polarized({"p"});
    const auto m = ModeRegistry::merged(*a, *b);
    CHECK(m->size() == 4);
    CHECK(m->id(mode("p", Polarization::V)).index == 3);
    CHECK_THROWS((void)ModeRegistry::merged(*a, *a));

    const auto w = m->without({ModeId{1}});
    CHECK(w->size() == 3);
    CHECK_FALSE(w->contains(mode("2")));
    CHECK(w->id(mode("p", Polarization::H)).index == 1);
}

TEST_CASE("registries compare by value") {
    CHECK(same_registry(ModeRegistry::scalar({"a"}), ModeRegistry::scalar({"a"})));
    CHECK_FALSE(same_registry(ModeRegistry::scalar({"a"}), ModeRegistry::scalar({"b"})));
}

TEST_CASE("labels") {
    CHECK(to_string(mode("3'", Polarization::V)) == "3':V");
    CHECK(to_string(mode("x")) == "x");
    CHECK(polarization_from_string("H") == Polarization::H);
    CHECK(polarization_from_string("none") == Polarization::None);
    CHECK_THROWS(polarization_from_string("D"));
}
