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

#include "isaccap/capacity.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "isaccap/errors.hpp"

namespace isaccap {
namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void check_distance(double d_m) {
    if (!std::isfinite(d_m) || d_m <= 0.0)
        throw DomainError("distance must be finite and > 0 m, got " + std::to_string(d_m));
}

void check_fraction(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0))
        throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
}

struct Kronrod {
    double value;
    double error;
};

// Gauss 7-point / Kronrod 15-point pair on [a, b].
template <class F>
Kronrod gauss_kronrod_15(const F& f, double a, double b) {
    static constexpr std::array<double, 8> kNodes = {
        0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
        0.405845151377397166906606412076961, 0.586087235467691130294144845693013,
        0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
        0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
    static constexpr std::array<double, 8> kKronrodWeights = {
        0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
        0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
        0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
        0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
    // Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) plus centre.
    static constexpr double kGaussCentre = 0.417959183673469387755102040816327;
    static constexpr std::array<double, 3> kGaussWeights = {
        0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
        0.129484966168869693270611432679082};

    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(centre);
    double kronrod = kKronrodWeights[0] * fc;
    double gauss = kGaussCentre * fc;
    for (std::size_t i = 1; i < kNodes.size(); ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 0) gauss += kGaussWeights[i / 2 - 1] * pair;
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

CapacityEstimate binned_capacity(const LinkProfile& profile, double d_m) {
    check_distance(d_m);
    const SnrModel snr_at(profile, d_m);

    const double f_min = profile.f_min.hz();
    const double bw = profile.bandwidth.hz();
    const auto n = profile.n_sc;
    const double df = bw / static_cast<double>(n);

    CompensatedSum at_upper_edges;
    CompensatedSum at_lower_edges;
    for (long long k = 1; k <= n; ++k) {
        const double f_hi = k == n ? f_min + bw : f_min + static_cast<double>(k) * df;
        const double f_lo = f_min + static_cast<double>(k - 1) * df;
        at_upper_edges.add(std::log2(1.0 + snr_at(f_hi)));
        at_lower_edges.add(std::log2(1.0 + snr_at(f_lo)));
    }

    CapacityEstimate est;
    est.duty_cycle_applied = profile.duty_cycle;
    est.n_bins_used = n;
    est.lower = profile.duty_cycle * (df * at_upper_edges.value());
    est.upper = profile.duty_cycle * (df * at_lower_edges.value());
    est.reported = est.lower;
    return est;
}

double continuous_capacity(const LinkProfile& profile, double d_m, double rel_tol) {
    check_distance(d_m);
    if (!(rel_tol > 0.0)) throw DomainError("continuous_capacity: rel_tol must be > 0");
    const SnrModel snr_at(profile, d_m);
    const auto integrand = [&](double f) { return std::log2(1.0 + snr_at(f)); };

    const double a = profile.f_min.hz();
    const double b = profile.f_max_hz();
    const double width = b - a;

    const Kronrod whole = gauss_kronrod_15(integrand, a, b);
    const double target = rel_tol * std::abs(whole.value);

    constexpr std::size_t kMaxIntervals = 1u << 16;
    struct Interval {
        double lo, hi;
    };
    std::vector<Interval> pending{{a, b}};
    CompensatedSum total;
    std::size_t evaluated = 0;

    while (!pending.empty()) {
        const Interval iv = pending.back();
        pending.pop_back();
        const Kronrod part = gauss_kronrod_15(integrand, iv.lo, iv.hi);
        ++evaluated;
        const double allowance = target * (iv.hi - iv.lo) / width;
        if (part.error <= allowance || evaluated >= kMaxIntervals) {
            total.add(part.value);
            continue;
        }
        const double mid = 0.5 * (iv.lo + iv.hi);
        // Right half pushed first so the left half is processed next.
        pending.push_back({mid, iv.hi});
        pending.push_back({iv.lo, mid});
    }
    return profile.duty_cycle * total.value();
}

double apply_duty_cycle(double c_full, double delta) {
    check_fraction(delta, "duty cycle");
    if (!(c_full >= 0.0) || !std::isfinite(c_full))
        throw DomainError("capacity must be finite and >= 0");
    return delta * c_full;
}

double effective_throughput(double c_full, double delta, double overhead_fraction) {
    check_fraction(overhead_fraction, "overhead fraction");
    return apply_duty_cycle(c_full, delta) * (1.0 - overhead_fraction);
}

}  // namespace isaccap
