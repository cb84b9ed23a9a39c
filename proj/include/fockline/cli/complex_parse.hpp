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
#pragma once

#include <string_view>
#include <vector>

#include "fockline/state.hpp"

namespace fockline::cli {

/// Parses "re", "re+imi", "re-imi" or "imi". Throws ParseError.
Amplitude parse_complex(std::string_view text);

/// Comma-separated list of complex numbers.
std::vector<Amplitude> parse_complex_list(std::string_view text);

} // namespace fockline::cli
