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

#include <compare>

namespace isaccap {

namespace constants {
inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kReferenceTemperature = 290.0;   // K
inline constexpr double kSignalSpeed = 3.0e8;            // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace constants

/// Power ratio in decibels (factor 10 convention). Any finite value.
class Decibel {
public:
    constexpr Decibel() = default;
    explicit Decibel(double value);

    constexpr double value() const noexcept { return value_; }

    friend constexpr auto operator<=>(const Decibel&, const Decibel&) = default;

private:
    double value_ = 0.0;
};

/// Frequency or frequency span in Hz; finite and strictly positive.
class Frequency {
public:
    explicit Frequency(double hz);

    constexpr double hz() const noexcept { return hz_; }

    friend constexpr auto operator<=>(const Frequency&, const Frequency&) = default;

private:
    double hz_;
};

/// Power in watts; finite and non-negative.
class PowerWatts {
public:
    constexpr PowerWatts() = default;
    explicit PowerWatts(double watts);

    constexpr double watts() const noexcept { return watts_; }

    friend constexpr auto operator<=>(const PowerWatts&, const PowerWatts&) = default;

private:
    double watts_ = 0.0;
};

double db_to_linear(Decibel x);
Decibel linear_to_db(double ratio);

namespace literals {
inline Decibel operator""_dB(long double v) { return Decibel(static_cast<double>(v)); }
inline Decibel operator""_dB(unsigned long long v) { return Decibel(static_cast<double>(v)); }
inline Frequency operator""_GHz(long double v) { return Frequency(static_cast<double>(v) * 1e9); }
inline Frequency operator""_GHz(unsigned long long v) { return Frequency(static_cast<double>(v) * 1e9); }
inline Frequency operator""_MHz(long double v) { return Frequency(static_cast<double>(v) * 1e6); }
inline Frequency operator""_MHz(unsigned long long v) { return Frequency(static_cast<double>(v) * 1e6); }
}  // namespace literals

}  // namespace isaccap
