// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isaccap/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace isaccap {

std::string format_fixed(double value, int decimals, Rounding rounding) {
    if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    if (decimals < 0) decimals = 0;

    // Every finite double has at most 1074 fractional decimal digits, so at
    // that precision std::to_chars prints the exact binary value and
    // truncation is a plain cut. In half-even mode to_chars rounds the exact
    // value itself, independent of locale and of the C runtime's printf.
    constexpr int kExactDigits = 1074;
    std::array<char, 1500> buf{};
    const int precision = rounding == Rounding::Truncate ? kExactDigits : decimals;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed, std::max(precision, decimals));
    if (res.ec != std::errc{}) throw std::runtime_error("format_fixed: buffer too small");
    std::string out(buf.data(), res.ptr);
    if (rounding == Rounding::Truncate) {
        const auto dot = out.find('.');
        out.resize(decimals == 0 ? dot : dot + 1 + static_cast<std::size_t>(decimals));
    }
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

std::string format_shortest(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (res.ec != std::errc{}) throw std::runtime_error("format_shortest: buffer too small");
    return std::string(buf.data(), res.ptr);
}

std::optional<double> parse_double(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

}  // namespace isaccap
