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
#include <string_view>
#include <vector>

#include "isaccap/channel.hpp"

namespace isaccap {

/// Automotive radar RadCom link at 76 GHz (the optimised configuration):
/// 10 dB antennas, 1 GHz over 3276 bins, 8 dB noise figure, 1 W.
LinkProfile builtin_radcom();

/// IEEE 802.11bd link in the 60 GHz band: 12.5 dB antennas, 1.28 GHz over
/// 3276 bins, 7.5 dB noise figure, 1 W.
LinkProfile builtin_wifi_bd();

/// "radcom" or "wifi_bd"; std::nullopt otherwise.
std::optional<LinkProfile> find_builtin(std::string_view name);

std::vector<LinkProfile> builtin_profiles();

}  // namespace isaccap
