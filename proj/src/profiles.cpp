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

#include "isaccap/profiles.hpp"

namespace isaccap {

// Transmit power is not part of the published parameter set; 1 W is the
// value the oracle back-solver recovers from the RadCom d = 1 m capacity.

LinkProfile builtin_radcom() {
    LinkProfile p;
    p.name = "radcom";
    p.g_t = Decibel(10.0);
    p.g_r = Decibel(10.0);
    p.f_min = Frequency(76e9);
    p.bandwidth = Frequency(1e9);
    p.n_sc = 3276;
    p.noise_figure = Decibel(8.0);
    p.duty_cycle = 1.0;
    p.tx_power = PowerWatts(1.0);
    p.temperature_k = constants::kReferenceTemperature;
    p.gain_model = GainModel::PaperTypeset;
    p.signal_speed = constants::kSignalSpeed;
    return p;
}

LinkProfile builtin_wifi_bd() {
    LinkProfile p = builtin_radcom();
    p.name = "wifi_bd";
    p.g_t = Decibel(12.5);
    p.g_r = Decibel(12.5);
    p.f_min = Frequency(60e9);
    p.bandwidth = Frequency(1.28e9);
    p.noise_figure = Decibel(7.5);
    return p;
}

std::optional<LinkProfile> find_builtin(std::string_view name) {
    if (name == "radcom") return builtin_radcom();
    if (name == "wifi_bd") return builtin_wifi_bd();
    return std::nullopt;
}

std::vector<LinkProfile> builtin_profiles() { return {builtin_radcom(), builtin_wifi_bd()}; }

}  // namespace isaccap
