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

#include "isaccap/channel.hpp"

#include <cmath>
#include <string>

#include "isaccap/errors.hpp"

namespace isaccap {
namespace {

void check_distance(double d_m) {
    if (!std::isfinite(d_m) || d_m <= 0.0)
        throw DomainError("distance must be finite and > 0 m, got " + std::to_string(d_m));
}

double gain_denominator_factor(GainModel model) {
    using constants::kPi;
    return model == GainModel::PaperTypeset ? 4.0 * kPi : 16.0 * kPi * kPi;
}

}  // namespace

std::string_view to_string(GainModel model) noexcept {
    switch (model) {
        case GainModel::PaperTypeset: return "paper_typeset";
        case GainModel::StandardFriis: return "standard_friis";
    }
    return "paper_typeset";
}

GainModel gain_model_from_string(std::string_view text) {
    if (text == "paper_typeset" || text == "paper-typeset") return GainModel::PaperTypeset;
    if (text == "standard_friis" || text == "standard-friis") return GainModel::StandardFriis;
    throw InvalidProfile("gain_model", "expected paper_typeset or standard_friis, got '" +
                                           std::string(text) + "'");
}

void validate(const LinkProfile& p) {
    // Strong types already guarantee f_min/bandwidth > 0, tx_power >= 0
    // and finite gains; what remains is cross-field and scalar checks.
    if (p.n_sc < 1) throw InvalidProfile("n_sc", "must be >= 1");
    if (!(p.duty_cycle >= 0.0 && p.duty_cycle <= 1.0))
        throw InvalidProfile("duty_cycle", "must lie in [0, 1], got " + std::to_string(p.duty_cycle));
    if (!(p.tx_power.watts() > 0.0)) throw InvalidProfile("tx_power_w", "must be > 0");
    if (!std::isfinite(p.temperature_k) || p.temperature_k <= 0.0)
        throw InvalidProfile("temperature_k", "must be finite and > 0");
    if (!std::isfinite(p.signal_speed) || p.signal_speed <= 0.0)
        throw InvalidProfile("signal_speed_m_s", "must be finite and > 0");
    if (!std::isfinite(p.f_max_hz())) throw InvalidProfile("bw_hz", "f_min + bw overflows");
}

double path_power_gain(const LinkProfile& profile, Frequency f, double d_m) {
    check_distance(d_m);
    const double g = db_to_linear(profile.g_t) * db_to_linear(profile.g_r);
    const double c = profile.signal_speed;
    const double fd = f.hz() * d_m;
    return g * c * c / (gain_denominator_factor(profile.gain_model) * fd * fd);
}

PowerWatts noise_power(const LinkProfile& profile) {
    return PowerWatts(constants::kBoltzmann * profile.temperature_k *
                      db_to_linear(profile.noise_figure) * profile.bandwidth.hz());
}

double snr(const LinkProfile& profile, Frequency f, double d_m) {
    // Bin edges are computed as f_min + n*df; allow round-off at the top edge.
    const double slack = 1e-12 * profile.f_max_hz();
    if (f.hz() < profile.f_min.hz() - slack || f.hz() > profile.f_max_hz() + slack)
        throw DomainError("frequency " + std::to_string(f.hz()) + " Hz outside band [" +
                          std::to_string(profile.f_min.hz()) + ", " +
                          std::to_string(profile.f_max_hz()) + "] Hz");
    return SnrModel(profile, d_m)(f.hz());
}

SnrModel::SnrModel(const LinkProfile& profile, double d_m) {
    validate(profile);
    // P_T * alpha^2(f) * f^2, so that the model evaluates scale / f^2.
    const double received_f2 =
        profile.tx_power.watts() * path_power_gain(profile, Frequency(1.0), d_m);
    scale_ = received_f2 / noise_power(profile).watts();
}

}  // namespace isaccap
