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

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace isaccap {

/// How the last printed digit is chosen.
enum class Rounding {
    HalfEven,  // nearest, exact ties to the even digit
    Truncate,  // toward zero; matches the digits printed in the published tables
};

/// Fixed-point rendering with `decimals` digits, taken from the exact
/// binary value. Locale independent. Negative zero renders without a sign.
std::string format_fixed(double value, int decimals, Rounding rounding = Rounding::HalfEven);

/// Shortest text that parses back to exactly `value`.
std::string format_shortest(double value);

/// Locale-independent strict parse of a whole string as a double.
std::optional<double> parse_double(std::string_view text);

constexpr double kBitsPerGbit = 1e9;

inline std::string format_gbps(double bits_per_second, Rounding rounding = Rounding::HalfEven) {
    return format_fixed(bits_per_second / kBitsPerGbit, 4, rounding);
}

}  // namespace isaccap
