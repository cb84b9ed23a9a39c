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
 * Subcommand implementations. Each returns a machine-readable report, a
 * human summary and the process exit code; nothing here touches stdout or
 * the file system, so reports can be compared byte for byte.
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fockline/cli/scenario.hpp"
#include "fockline/io.hpp"

namespace fockline::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitDegenerate = 2,
    kExitUsage = 3,
};

struct RunReport {
    io::Json json;
    std::string summary;
    int exit_code{kExitOk};
};

RunReport cmd_filter(Amplitude alpha, Amplitude beta, Amplitude gamma,
                     circuits::HeraldPolicy heralds =
                         circuits::HeraldPolicy::FeedForward);
RunReport cmd_project(const std::vector<Amplitude> &c,
                      circuits::HeraldPolicy heralds =
                          circuits::HeraldPolicy::FeedForward,
                      bool checkpoints = false);
RunReport cmd_ghz(std::size_t n, circuits::HeraldPolicy heralds =
                                     circuits::HeraldPolicy::FeedForward);
/// Runs a scenario; checkpoints are emitted when the scenario asks or
/// `force_checkpoints` is set.
RunReport run_scenario(const Scenario &scenario, bool force_checkpoints = false);
RunReport cmd_trace(const Scenario &scenario);
RunReport cmd_verify(std::uint64_t seed, std::size_t trials,
                     std::size_t threads = 0);

/// One sweep axis "name=start:stop:count" (count >= 1, inclusive ends).
struct GridAxis {
    std::string name;
    double start{0.0};
    double stop{0.0};
    std::size_t count{1};

    [[nodiscard]] double value(std::size_t i) const;
};

GridAxis parse_grid_axis(std::string_view text);

/// Evaluates the scenario on the cartesian product of the axes (first axis
/// slowest). Records are emitted in grid-index order.
RunReport cmd_sweep(const Scenario &scenario, const std::vector<GridAxis> &grid,
                    std::size_t threads = 0);

/// Adds "wall_time_s" to a report.
void attach_wall_time(RunReport &report, double seconds);

} // namespace fockline::cli
