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

#include "isaccap/quantities.hpp"

#include <cmath>
#include <string>

#include "isaccap/errors.hpp"

namespace isaccap {

Decibel::Decibel(double value) : value_(value) {
    if (!std::isfinite(value)) throw DomainError("decibel value must be finite");
}

Frequency::Frequency(double hz) : hz_(hz) {
    if (!std::isfinite(hz) || hz <= 0.0)
        throw DomainError("frequency must be finite and > 0, got " + std::to_string(hz));
}

PowerWatts::PowerWatts(double watts) : watts_(watts) {
    if (!std::isfinite(watts) || watts < 0.0)
        throw DomainError("power must be finite and >= 0, got " + std::to_string(watts));
}

double db_to_linear(Decibel x) {
    if (!std::isfinite(x.value())) throw DomainError("db_to_linear: non-finite input");
    return std::pow(10.0, x.value() / 10.0);
}

Decibel linear_to_db(double ratio) {
    if (!(ratio > 0.0) || !std::isfinite(ratio))
        throw DomainError("linear_to_db: ratio must be finite and > 0");
    return Decibel(10.0 * std::log10(ratio));
}

}  // namespace isaccap
