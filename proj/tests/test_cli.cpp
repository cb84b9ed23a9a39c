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
#include <cmath>

#include <doctest.h>

#include "fockline/cli/commands.hpp"
#include "fockline/cli/complex_parse.hpp"
#include "fockline/errors.hpp"

using namespace fockline;
using namespace fockline::cli;

TEST_CASE("complex flag syntax") {
    CHECK(parse_complex("0.5") == Amplitude(0.5, 0.0));
    CHECK(parse_complex("-1e-3") == Amplitude(-1e-3, 0.0));
    CHECK(parse_complex("1+2i") == Amplitude(1.0, 2.0));
    CHECK(parse_complex("1-2.5i") == Amplitude(1.0, -2.5));
    CHECK(parse_complex("-0.5i") == Amplitude(0.0, -0.5));
    CHECK(parse_complex("i") == Amplitude(0.0, 1.0));
    CHECK(parse_complex("-i") == Amplitude(0.0, -1.0));
    CHECK(parse_complex("2e-1+1e1i") == Amplitude(0.2, 10.0));
    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK_THROWS_AS(parse_complex("1+"), ParseError);
    CHECK_THROWS_AS(parse_complex("abc"), ParseError);
    CHECK_THROWS_AS(parse_complex("1+2"), ParseError);

    const auto list = parse_complex_list("0.5,0.5i,-0.5,1-i");
    REQUIRE(list.size() == 4);
    CHECK(list[3] == Amplitude(1.0, -1.0));
}

TEST_CASE("scenario parsing") {
    const auto s = parse_scenario(R"({
      "circuit": "projector",
      "parameters": {"c0": 0.5, "c1": [0.0, 0.5], "c2": "0.5", "c3": "-0.5i"},
      "heralds": "strict",
      "emit_checkpoints": true
    })");
    CHECK(s.circuit == CircuitKind::Projector);
    CHECK(s.parameter("c1") == Amplitude(0.0, 0.5));
    CHECK(s.parameter("c3") == Amplitude(0.0, -0.5));
    CHECK(s.heralds == circuits::HeraldPolicy::Strict);
    CHECK(s.emit_checkpoints);

    const auto echo = parse_scenario(io::dump(scenario_to_json(s)));
    CHECK(io::dump(scenario_to_json(echo)) == io::dump(scenario_to_json(s)));
}

TEST_CASE("malformed scenarios report where") {
    try {
        (void)parse_scenario("{\n  \"circuit\": \"filter\",\n  \"parameters\": {\"alpha\": 1,}\n}");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS(parse_scenario(R"({"circuit": "laser"})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"circuit": "filter", "parameters": {"delta": 1}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"circuit": "custom"})"), ParseError);
}

TEST_CASE("filter command") {
    const auto r = cmd_filter(0.577, 0.577, 0.577);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.json["success_probability"].get<double>() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // 3 * 0.577^2 != 1, so the input was rescaled.
    CHECK(r.json["warnings"].size() == 1);
    CHECK_FALSE(r.json.contains("wall_time_s"));

    const auto unit = cmd_filter(1.0, 0.0, 0.0);
    CHECK(unit.json["warnings"].empty());
    CHECK(unit.json["success_probability"].get<double>() == doctest::Approx(0.5));

    const auto degenerate = cmd_filter(0.0, 1.0, 0.0);
    CHECK(degenerate.exit_code == kExitDegenerate);
    CHECK(degenerate.json["degenerate"].get<bool>());

    CHECK(cmd_filter(0.0, 0.0, 0.0).exit_code == kExitDegenerate);
}

TEST_CASE("project and ghz commands") {
    const auto p = cmd_project({0.5, 0.5, 0.5, 0.5});
    CHECK(p.json["success_probability"].get<double>() == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(p.json["target_fidelity"].get<double>() > 1.0 - 1e-12);
    CHECK_FALSE(p.json.contains("checkpoints"));
    CHECK_THROWS_AS(cmd_project({0.5, 0.5}), ArgumentError);

    const auto g = cmd_ghz(4);
    CHECK(g.json["cumulative_probability"].get<double>() ==
          doctest::Approx(0.001953125).epsilon(1e-12));
}

TEST_CASE("reports are byte-identical across runs") {
    CHECK(io::dump(cmd_project({0.1, 0.2, 0.3, 0.4}, circuits::HeraldPolicy::FeedForward,
                               true)
                       .json) ==
          io::dump(cmd_project({0.1, 0.2, 0.3, 0.4}, circuits::HeraldPolicy::FeedForward,
                               true)
                       .json));
    CHECK(io::dump(cmd_verify(3, 25, 1).json) == io::dump(cmd_verify(3, 25, 4).json));
}

TEST_CASE("trace adds checkpoints with reference fidelities") {
    auto s = parse_scenario(R"({"circuit": "projector",
        "parameters": {"c0": 0.6, "c1": 0.0, "c2": 0.0, "c3": 0.8}})");
    const auto r = cmd_trace(s);
    CHECK(r.json["command"] == "trace");
    REQUIRE(r.json["checkpoints"].size() == 9);
    for (const auto &cp : r.json["checkpoints"]) {
        CHECK(cp["reference_fidelity"].get<double>() > 1.0 - 1e-12);
    }
}

TEST_CASE("custom networks") {
    const auto s = parse_scenario(R"({
      "circuit": "custom",
      "network": {
        "input": {"modes": [{"path": "a"}, {"path": "b"}],
                  "terms": [{"occupation": [1, 1], "re": 1, "im": 0}]},
        "elements": [{"kind": "bs", "modes": [{"path": "a"}, {"path": "b"}]}],
        "detect": [{"path": "a"}]
      }
    })");
    const auto r = run_scenario(s);
    const auto &branches = r.json["branches"];
    REQUIRE(branches.size() == 2);
    CHECK(branches[0]["probability"].get<double>() == doctest::Approx(0.5));
    CHECK(branches[1]["probability"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("verify command") {
    const auto r = cmd_verify(7, 20);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.json["result"] == "20/20 matched");
    CHECK(r.summary.find("20/20 matched") != std::string::npos);
}

TEST_CASE("grid axes") {
    const auto a = parse_grid_axis("alpha=0:1:5");
    CHECK(a.name == "alpha");
    CHECK(a.count == 5);
    CHECK(a.value(0) == 0.0);
    CHECK(a.value(2) == 0.5);
    CHECK(a.value(4) == 1.0);
    CHECK_THROWS_AS(parse_grid_axis("alpha=0:1"), ParseError);
    CHECK_THROWS_AS(parse_grid_axis("alpha=0:1:0"), ParseError);
    CHECK_THROWS_AS(parse_grid_axis("=0:1:2"), ParseError);
    CHECK_THROWS_AS(parse_grid_axis("alpha=x:1:2"), ParseError);
}

TEST_CASE("sweeping filter inputs reproduces the success plane") {
    auto s = parse_scenario(R"({"circuit": "filter",
        "parameters": {"alpha": 0.5, "beta": 0.5, "gamma": 0.5}})");
    const auto r = cmd_sweep(s, {parse_grid_axis("alpha=-1:1:9"),
                                 parse_grid_axis("gamma=0:1:7")}, 4);
    CHECK(r.json["points"] == 63);
    std::size_t evaluated = 0;
    for (const auto &rec : r.json["records"]) {
        const double a = rec["point"]["alpha"].get<double>();
        const double g = rec["point"]["gamma"].get<double>();
        const double n2 = a * a + 0.25 + g * g;
        const double plane = (a * a + g * g) / n2 / 2.0;
        CHECK(std::abs(rec["success_probability"].get<double>() - plane) <= 1e-12);
        ++evaluated;
    }
    CHECK(evaluated == 63);
    CHECK(r.json["max_deviation"].get<double>() <= 1e-12);

    const auto again = cmd_sweep(s, {parse_grid_axis("alpha=-1:1:9"),
                                     parse_grid_axis("gamma=0:1:7")}, 1);
    CHECK(io::dump(again.json) == io::dump(r.json));
}

TEST_CASE("wall time only when asked") {
    auto r = cmd_ghz(2);
    attach_wall_time(r, 0.25);
    CHECK(r.json["wall_time_s"].get<double>() == 0.25);
}
