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

#include "isaccap/channel.hpp"

namespace isaccap {

/// Shannon capacity of an OFDM link bracketed by per-bin gain bounds.
/// All values in bit/s. `reported` is always the lower bound.
struct CapacityEstimate {
    double lower = 0.0;
    double upper = 0.0;
    double reported = 0.0;
    long long n_bins_used = 0;
    double duty_cycle_applied = 1.0;

    double gap() const noexcept { return upper - lower; }

    bool operator==(const CapacityEstimate&) const = default;
};

/// Finite-sum capacity over `profile.n_sc` equal bins.
///
/// Bin n covers [f_{n-1}, f_n] with f_n = f_min + n*BW/N. The gain is
/// decreasing in frequency, so evaluating every bin at its upper edge gives
/// the lower bound and at its lower edge gives the upper bound.
CapacityEstimate binned_capacity(const LinkProfile& profile, double d_m);

/// Capacity integral over [f_min, f_max], scaled by the duty cycle.
/// Adaptive Gauss-Kronrod (7/15) with relative tolerance `rel_tol`.
double continuous_capacity(const LinkProfile& profile, double d_m, double rel_tol = 1e-11);

double apply_duty_cycle(double c_full, double delta);

/// Capacity left after the duty cycle and a protocol overhead fraction.
double effective_throughput(double c_full, double delta, double overhead_fraction);

}  // namespace isaccap
