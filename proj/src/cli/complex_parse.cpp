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
#include "fockline/cli/complex_parse.hpp"

#include <charconv>
#include <string>

#include "fockline/errors.hpp"

namespace fockline::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    if (s.empty() || s == "-") {
        // Bare "i" / "-i".
        return s.empty() ? 1.0 : -1.0;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("malformed complex number '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Amplitude parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) {
        throw ParseError("empty complex number");
    }
    if (s.back() != 'i') {
        return {parse_real(s, text), 0.0};
    }
    const std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not an exponent sign or the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
            body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_real(body, text)};
    }
    return {parse_real(body.substr(0, split), text),
            parse_real(body.substr(split), text)};
}

std::vector<Amplitude> parse_complex_list(std::string_view text) {
    std::vector<Amplitude> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_complex(text.substr(start, stop - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

} // namespace fockline::cli
