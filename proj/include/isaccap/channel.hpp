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

#include <string>
#include <string_view>

#include "isaccap/quantities.hpp"

namespace isaccap {

/// Which form of the free-space mean path gain to use.
///
/// PaperTypeset:  G_T G_R c^2 / (4 pi d^2 f^2)
/// StandardFriis: G_T G_R c^2 / (4 pi d f)^2   (smaller by a factor 4 pi)
///
/// PaperTypeset is the default: with a 1 W transmitter it reproduces the
/// published RadCom capacity tables.
enum class GainModel { PaperTypeset, StandardFriis };

std::string_view to_string(GainModel model) noexcept;
/// Accepts "paper_typeset" / "standard_friis" (also with '-' separators).
GainModel gain_model_from_string(std::string_view text);

/// Complete parameter set of one radio link. All gains and the noise
/// figure are stored in dB; every computation converts to linear units.
struct LinkProfile {
    std::string name;
    Decibel g_t{};
    Decibel g_r{};
    Frequency f_min{76e9};
    Frequency bandwidth{1e9};
    long long n_sc = 1;
    Decibel noise_figure{};
    double duty_cycle = 1.0;
    PowerWatts tx_power{1.0};
    double temperature_k = constants::kReferenceTemperature;
    GainModel gain_model = GainModel::PaperTypeset;
    double signal_speed = constants::kSignalSpeed;

    double f_max_hz() const noexcept { return f_min.hz() + bandwidth.hz(); }

    bool operator==(const LinkProfile&) const = default;
};

/// Throws InvalidProfile naming the first field that breaks an invariant.
void validate(const LinkProfile& profile);

/// Mean power gain of the first arrival at frequency `f`, distance `d_m`.
double path_power_gain(const LinkProfile& profile, Frequency f, double d_m);

/// Thermal noise k T0 F BW over the full band.
PowerWatts noise_power(const LinkProfile& profile);

/// Received SNR at frequency `f` (must lie in [f_min, f_max]).
double snr(const LinkProfile& profile, Frequency f, double d_m);

/// SNR as a function of frequency for a fixed profile and distance.
///
/// Folds every frequency-independent factor into one scale so that the
/// per-frequency cost is a single division. Shared by the binned sum and
/// the continuous integral in the capacity engine.
class SnrModel {
public:
    SnrModel(const LinkProfile& profile, double d_m);

    double operator()(double f_hz) const noexcept { return scale_ / (f_hz * f_hz); }

private:
    double scale_;
};

}  // namespace isaccap
