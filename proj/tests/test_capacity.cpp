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

#include <doctest.h>

#include <cmath>
#include <random>

#include "isaccap/capacity.hpp"
#include "isaccap/errors.hpp"
#include "isaccap/profiles.hpp"

using namespace isaccap;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

constexpr double kGbps = 1e9;

LinkProfile radcom_with(void (*tweak)(LinkProfile&)) {
    LinkProfile p = builtin_radcom();
    tweak(p);
    return p;
}

// Test-local brute force: trapezoid rule on 2^18 panels, straight from the
// link-budget formulas.
double brute_force_capacity(const LinkProfile& p, double d) {
    const double gains = std::pow(10.0, (p.g_t.value() + p.g_r.value()) / 10.0);
    const double noise = 1.380649e-23 * p.temperature_k *
                         std::pow(10.0, p.noise_figure.value() / 10.0) * p.bandwidth.hz();
    const double four_pi = 4.0 * 3.14159265358979323846;
    const double spread = p.gain_model == GainModel::PaperTypeset ? four_pi : four_pi * four_pi;
    auto g = [&](double f) {
        const double a2 = gains * p.signal_speed * p.signal_speed / (spread * d * d * f * f);
        return std::log2(1.0 + p.tx_power.watts() * a2 / noise);
    };
    const int n = 1 << 18;
    const double h = p.bandwidth.hz() / n;
    long double acc = 0.5L * (g(p.f_min.hz()) + g(p.f_max_hz()));
    for (int k = 1; k < n; ++k) acc += g(p.f_min.hz() + k * h);
    return p.duty_cycle * static_cast<double>(acc * h);
}

LinkProfile random_profile(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> gain(5.0, 15.0), fmin(58e9, 81e9), bw(1e8, 2e9),
        nf(5.0, 12.0), duty(0.05, 1.0), log_pt(-2.0, 1.0);
    std::uniform_int_distribution<int> bins(1, 5000);
    LinkProfile p = builtin_radcom();
    p.g_t = Decibel(gain(rng));
    p.g_r = Decibel(gain(rng));
    p.f_min = Frequency(fmin(rng));
    p.bandwidth = Frequency(bw(rng));
    p.noise_figure = Decibel(nf(rng));
    p.duty_cycle = duty(rng);
    p.tx_power = PowerWatts(std::pow(10.0, log_pt(rng)));
    p.n_sc = bins(rng);
    return p;
}

}  // namespace

TEST_CASE("binned capacity reproduces the RadCom tables") {
    struct Case {
        void (*tweak)(LinkProfile&);
        double gbps[3];
    };
    const Case cases[] = {
        {[](LinkProfile&) {}, {22.2078, 10.9208, 6.9320}},
        {[](LinkProfile& p) { p.f_min = Frequency(81e9); }, {22.0251, 10.7383, 6.7509}},
        {[](LinkProfile& p) { p.n_sc = 100; }, {22.2076, 10.9207, 6.9318}},
        {[](LinkProfile& p) { p.bandwidth = Frequency(150e6); }, {3.7441, 2.0509, 1.4512}},
        {[](LinkProfile& p) { p.noise_figure = Decibel(10.0); }, {21.5434, 10.2569, 6.2745}},
    };
    const double distances[] = {1.0, 50.0, 200.0};
    for (const auto& c : cases) {
        const LinkProfile p = radcom_with(c.tweak);
        for (int i = 0; i < 3; ++i) {
            const auto est = binned_capacity(p, distances[i]);
            CAPTURE(distances[i]);
            CHECK(rel_close(est.reported / kGbps, c.gbps[i], 5e-4));
            CHECK(est.reported == est.lower);
            CHECK(est.n_bins_used == p.n_sc);
        }
    }
}

TEST_CASE("continuous capacity") {
    const LinkProfile p = builtin_radcom();
    SUBCASE("zero duty cycle gives exactly zero") {
        LinkProfile off = p;
        off.duty_cycle = 0.0;
        CHECK(continuous_capacity(off, 1.0) == 0.0);
        CHECK(binned_capacity(off, 1.0).upper == 0.0);
    }
    SUBCASE("d = 50 m close to the 3276-bin lower bound") {
        const double c = continuous_capacity(p, 50.0);
        CHECK(rel_close(c, binned_capacity(p, 50.0).lower, 1e-4));
        CHECK(rel_close(c / kGbps, 10.9208, 1e-4));
    }
    SUBCASE("agrees with an independent trapezoid rule") {
        for (double d : {1.0, 50.0, 200.0})
            CHECK(rel_close(continuous_capacity(p, d), brute_force_capacity(p, d), 1e-9));
    }
    SUBCASE("sandwiched by every bin count at d = 1 m") {
        const double c = continuous_capacity(p, 1.0);
        for (long long n : {1LL, 2LL, 3LL, 10LL, 100LL, 3276LL, 10000LL}) {
            LinkProfile q = p;
            q.n_sc = n;
            const auto est = binned_capacity(q, 1.0);
            CAPTURE(n);
            CHECK(est.lower <= c);
            CHECK(c <= est.upper);
        }
    }
    CHECK_THROWS_AS(continuous_capacity(p, 0.0), DomainError);
    CHECK_THROWS_AS(binned_capacity(p, -3.0), DomainError);
}

TEST_CASE("sandwich, gap halving and duty-cycle linearity on random profiles") {
    std::mt19937_64 rng(20241015);
    for (int i = 0; i < 40; ++i) {
        const LinkProfile p = random_profile(rng);
        for (double d : {1.0, 10.0, 100.0}) {
            CAPTURE(i);
            CAPTURE(d);
            const auto est = binned_capacity(p, d);
            const double c = continuous_capacity(p, d);
            CHECK(est.lower <= c);
            CHECK(c <= est.upper);
            CHECK(rel_close(c, brute_force_capacity(p, d), 1e-9));

            LinkProfile twice = p;
            twice.n_sc = 2 * p.n_sc;
            const auto finer = binned_capacity(twice, d);
            CHECK(finer.gap() <= 0.5 * est.gap() + 1e-12 * est.upper);
            CHECK(finer.lower >= est.lower);
            CHECK(finer.upper <= est.upper);

            LinkProfile full = p;
            full.duty_cycle = 1.0;
            const auto at_full = binned_capacity(full, d);
            CHECK(rel_close(est.lower, p.duty_cycle * at_full.lower, 1e-12));
            CHECK(rel_close(est.upper, p.duty_cycle * at_full.upper, 1e-12));
        }
    }
}

TEST_CASE("bound gap shrinks toward zero") {
    LinkProfile p = builtin_radcom();
    double prev_gap = INFINITY;
    for (long long n : {10LL, 100LL, 1000LL, 10000LL}) {
        p.n_sc = n;
        const auto est = binned_capacity(p, 50.0);
        CHECK(est.gap() < prev_gap / 9.99);
        prev_gap = est.gap();
    }
    CHECK(prev_gap / binned_capacity(p, 50.0).lower < 1e-6);
}

TEST_CASE("monotonicity") {
    const LinkProfile p = builtin_radcom();
    SUBCASE("decreasing in distance") {
        double prev = binned_capacity(p, 1.0).reported;
        for (double d = 2.0; d <= 200.0; d += 1.0) {
            const double c = binned_capacity(p, d).reported;
            CHECK(c < prev);
            prev = c;
        }
    }
    SUBCASE("decreasing in noise figure") {
        double prev = INFINITY;
        for (double nf = 0.0; nf <= 15.0; nf += 0.5) {
            LinkProfile q = p;
            q.noise_figure = Decibel(nf);
            const double c = binned_capacity(q, 50.0).reported;
            CHECK(c < prev);
            prev = c;
        }
    }
    SUBCASE("increasing in bandwidth") {
        double prev = 0.0;
        for (double bw : {1e8, 1.5e8, 3e8, 5e8, 1e9, 2e9, 4e9}) {
            LinkProfile q = p;
            q.bandwidth = Frequency(bw);
            const double c = binned_capacity(q, 50.0).reported;
            CHECK(c > prev);
            prev = c;
        }
    }
    SUBCASE("76 GHz beats 81 GHz by less than 3 %") {
        LinkProfile high = p;
        high.f_min = Frequency(81e9);
        for (double d = 1.0; d <= 200.0; d += 7.0) {
            const double c76 = binned_capacity(p, d).reported;
            const double c81 = binned_capacity(high, d).reported;
            CHECK(c76 > c81);
            CHECK((c76 - c81) / c76 < 0.03);
        }
    }
}

TEST_CASE("single bin is legal") {
    LinkProfile p = builtin_radcom();
    p.n_sc = 1;
    const auto est = binned_capacity(p, 10.0);
    CHECK(est.lower > 0.0);
    CHECK(est.lower < est.upper);
}

TEST_CASE("binned capacity is deterministic") {
    const LinkProfile p = builtin_wifi_bd();
    const auto a = binned_capacity(p, 17.0);
    const auto b = binned_capacity(p, 17.0);
    CHECK(a == b);
}

TEST_CASE("apply_duty_cycle") {
    CHECK(rel_close(apply_duty_cycle(22.2078e9, 0.1), 2.22078e9, 1e-15));
    CHECK(apply_duty_cycle(1234.5, 1.0) == 1234.5);
    CHECK(apply_duty_cycle(1234.5, 0.0) == 0.0);
    CHECK_THROWS_AS(apply_duty_cycle(1.0, 1.1), DomainError);
    CHECK_THROWS_AS(apply_duty_cycle(1.0, -0.1), DomainError);
    CHECK_THROWS_AS(apply_duty_cycle(-1.0, 0.5), DomainError);
}

TEST_CASE("effective_throughput") {
    CHECK(std::abs(effective_throughput(10.9208e9, 0.1, 0.5) - 546.04e6) < 0.01e6);
    CHECK(effective_throughput(3.0e9, 1.0, 0.0) == 3.0e9);
    CHECK(effective_throughput(3.0e9, 0.5, 0.5) == 3.0e9 / 4);
    CHECK_THROWS_AS(effective_throughput(1.0, 0.5, 1.5), DomainError);
    CHECK_THROWS_AS(effective_throughput(1.0, 2.0, 0.5), DomainError);
}
