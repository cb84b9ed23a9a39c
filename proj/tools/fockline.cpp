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
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockline/cli/commands.hpp"
#include "fockline/cli/complex_parse.hpp"
#include "fockline/errors.hpp"

namespace {

using namespace fockline;
using namespace fockline::cli;

struct Common {
    std::string out;
    std::string heralds{"feedforward"};
    bool json{false};
    bool timing{false};
    std::size_t threads{0};
};

int emit(RunReport report, const Common &common, double seconds) {
    if (common.timing) {
        attach_wall_time(report, seconds);
    }
    const std::string text = io::dump(report.json);
    if (!common.out.empty()) {
        std::ofstream f(common.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << common.out << '\n';
            return kExitUsage;
        }
        f << text;
    }
    if (common.json) {
        std::cout << text;
    } else {
        std::cout << report.summary;
        if (common.timing) {
            std::cout << "  wall_time_s " << seconds << '\n';
        }
    }
    return report.exit_code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fock-space simulator for heralded linear-optics circuits"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--out", common.out, "Write the JSON report to this file");
    app.add_option("--heralds", common.heralds, "Herald policy: feedforward or strict")
        ->check(CLI::IsMember({"feedforward", "strict"}));
    app.add_flag("--json", common.json, "Print the JSON report instead of the summary");
    app.add_flag("--timing", common.timing, "Include wall-clock time in the report");
    app.add_option("--threads", common.threads, "Worker threads (0 = hardware)");

    std::function<RunReport()> action;

    auto *filter = app.add_subcommand("filter", "Run the single-mode state filter");
    std::string alpha = "0";
    std::string beta = "0";
    std::string gamma = "0";
    filter->add_option("--alpha", alpha, "Amplitude of |0>")->required();
    filter->add_option("--beta", beta, "Amplitude of |1>")->required();
    filter->add_option("--gamma", gamma, "Amplitude of |2>")->required();
    filter->callback([&] {
        action = [&] {
            return cmd_filter(parse_complex(alpha), parse_complex(beta), parse_complex(gamma),
                              circuits::herald_policy_from_string(common.heralds));
        };
    });

    auto *project = app.add_subcommand("project", "Run the two-photon parity projector");
    std::string c_list;
    bool checkpoints = false;
    project->add_option("--c", c_list, "c0,c1,c2,c3 for |HH>,|HV>,|VH>,|VV>")->required();
    project->add_flag("--checkpoints", checkpoints, "Report intermediate stage states");
    project->callback([&] {
        action = [&] {
            return cmd_project(parse_complex_list(c_list),
                               circuits::herald_policy_from_string(common.heralds),
                               checkpoints);
        };
    });

    auto *ghz = app.add_subcommand("ghz", "Grow an n-photon GHZ state");
    std::size_t n = 2;
    ghz->add_option("--n", n, "Number of photons")->required()->check(CLI::Range(2, 64));
    ghz->callback([&] {
        action = [&] {
            return cmd_ghz(n, circuits::herald_policy_from_string(common.heralds));
        };
    });

    auto *trace = app.add_subcommand("trace", "Run a scenario file and report checkpoints");
    std::string trace_file;
    trace->add_option("scenario", trace_file, "Scenario file")->required();
    trace->callback([&] { action = [&] { return cmd_trace(load_scenario(trace_file)); }; });

    auto *verify = app.add_subcommand("verify", "Check the engine against the permanent oracle");
    std::uint64_t seed = 7;
    std::size_t trials = 200;
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--trials", trials, "Number of random circuits");
    verify->callback([&] {
        action = [&] { return cmd_verify(seed, trials, common.threads); };
    });

    auto *sweep = app.add_subcommand("sweep", "Evaluate a scenario over a parameter grid");
    std::string sweep_file;
    std::vector<std::string> grid_specs;
    sweep->add_option("scenario", sweep_file, "Scenario file")->required();
    sweep->add_option("--grid", grid_specs, "name=start:stop:count (repeatable)")
        ->required()
        ->allow_extra_args(false);
    sweep->callback([&] {
        action = [&] {
            std::vector<GridAxis> grid;
            for (const auto &g : grid_specs) {
                grid.push_back(parse_grid_axis(g));
            }
            return cmd_sweep(load_scenario(sweep_file), grid, common.threads);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        RunReport report = action();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        return emit(std::move(report), common, dt.count());
    } catch (const DegenerateState &e) {
        std::cerr << "degenerate: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
