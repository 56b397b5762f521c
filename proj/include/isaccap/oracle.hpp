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

// Independent verification path. Nothing here calls into the channel or
// capacity code: the gain, noise and SNR are recomposed from the raw
// profile fields and integrated with a plain midpoint rule, so agreement
// with the engine is evidence rather than a tautology.

#include <string>
#include <vector>

#include "isaccap/channel.hpp"

namespace isaccap {

inline constexpr long long kOracleMinSamples = 100'000;
inline constexpr long long kOracleDefaultSamples = 1'000'000;
inline constexpr double kTableTolerance = 5e-4;

struct OracleReport {
    std::string target;
    double published_value = 0.0;  // bit/s
    double oracle_value = 0.0;     // bit/s
    double engine_value = 0.0;     // bit/s
    double relative_error = 0.0;   // |oracle - engine| / oracle
    double published_error = 0.0;  // |published - engine| / published
    bool passed = false;
};

/// Midpoint-rule capacity over `samples` uniform sub-intervals of the band.
double oracle_capacity(const LinkProfile& profile, double d_m,
                       long long samples = kOracleDefaultSamples);

/// Transmit power at which oracle_capacity reaches `target_capacity`.
/// Bisection on log(P_T) over [1e-6, 1e3] W. Throws DomainError if the
/// target lies outside that bracket. `profile.tx_power` is ignored.
PowerWatts backsolve_tx_power(const LinkProfile& profile, double d_m, double target_capacity,
                              long long samples = kOracleDefaultSamples);

/// Every cell of the four published RadCom tables, evaluated with the
/// engine (binned lower bound) and the oracle. A cell passes when both the
/// engine/oracle disagreement and the engine/published deviation are
/// within kTableTolerance. `gain_model` overrides the RadCom default.
std::vector<OracleReport> verify_all_tables(GainModel gain_model = GainModel::PaperTypeset,
                                            long long samples = kOracleDefaultSamples);

struct TxPowerCheck {
    double target_capacity = 0.0;  // bit/s, RadCom at 1 m
    double solved_tx_power_w = 0.0;
    bool passed = false;  // solved value within [0.99, 1.01] W
};

/// Recovers P_T from the published RadCom capacity at d = 1 m.
TxPowerCheck check_tx_power(GainModel gain_model = GainModel::PaperTypeset,
                            long long samples = kOracleDefaultSamples);

}  // namespace isaccap
