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

#include "isaccap/oracle.hpp"

#include <array>
#include <cmath>
#include <string>

#include "isaccap/capacity.hpp"
#include "isaccap/errors.hpp"
#include "isaccap/format.hpp"
#include "isaccap/profiles.hpp"

namespace isaccap {
namespace {

constexpr double kBoltzmannJPerK = 1.380649e-23;
constexpr double kFourPi = 12.566370614359172953850573533118;

struct PublishedCell {
    const char* table;
    const char* column;
    double distance_m;
    double gbps;
};

// RadCom capacity tables, Gbps.
constexpr std::array<PublishedCell, 24> kPublished = {{
    {"III", "f_min=76GHz", 1, 22.2078},   {"III", "f_min=76GHz", 50, 10.9208},
    {"III", "f_min=76GHz", 200, 6.9320},  {"III", "f_min=81GHz", 1, 22.0251},
    {"III", "f_min=81GHz", 50, 10.7383},  {"III", "f_min=81GHz", 200, 6.7509},
    {"IV", "n_sc=100", 1, 22.2076},       {"IV", "n_sc=100", 50, 10.9207},
    {"IV", "n_sc=100", 200, 6.9318},      {"IV", "n_sc=10000", 1, 22.2078},
    {"IV", "n_sc=10000", 50, 10.9208},    {"IV", "n_sc=10000", 200, 6.9320},
    {"V", "bw=150MHz", 1, 3.7441},        {"V", "bw=150MHz", 50, 2.0509},
    {"V", "bw=150MHz", 200, 1.4512},      {"V", "bw=1GHz", 1, 22.2078},
    {"V", "bw=1GHz", 50, 10.9208},        {"V", "bw=1GHz", 200, 6.9320},
    {"VI", "F=8dB", 1, 22.2078},          {"VI", "F=8dB", 50, 10.9208},
    {"VI", "F=8dB", 200, 6.9320},         {"VI", "F=10dB", 1, 21.5434},
    {"VI", "F=10dB", 50, 10.2569},        {"VI", "F=10dB", 200, 6.2745},
}};

LinkProfile cell_profile(const PublishedCell& cell, GainModel gain_model) {
    LinkProfile p = builtin_radcom();
    p.gain_model = gain_model;
    const std::string column = cell.column;
    if (column == "f_min=81GHz") p.f_min = Frequency(81e9);
    if (column == "n_sc=100") p.n_sc = 100;
    if (column == "n_sc=10000") p.n_sc = 10000;
    if (column == "bw=150MHz") p.bandwidth = Frequency(150e6);
    if (column == "F=10dB") p.noise_figure = Decibel(10.0);
    return p;
}

double relative_error(double reference, double value) {
    return std::abs(reference - value) / std::abs(reference);
}

}  // namespace

double oracle_capacity(const LinkProfile& profile, double d_m, long long samples) {
    if (!(d_m > 0.0) || !std::isfinite(d_m))
        throw DomainError("oracle_capacity: distance must be > 0 m");
    if (samples < kOracleMinSamples)
        throw DomainError("oracle_capacity: need at least 1e5 samples, got " +
                          std::to_string(samples));

    const double gains = std::pow(10.0, (profile.g_t.value() + profile.g_r.value()) / 10.0);
    const double noise_factor = std::pow(10.0, profile.noise_figure.value() / 10.0);
    const double bandwidth = profile.bandwidth.hz();
    const double noise_w = kBoltzmannJPerK * profile.temperature_k * noise_factor * bandwidth;
    const double spreading = profile.gain_model == GainModel::PaperTypeset ? kFourPi
                                                                            : kFourPi * kFourPi;
    const double h = bandwidth / static_cast<double>(samples);

    long double acc = 0.0L;
    for (long long k = 0; k < samples; ++k) {
        const double f = profile.f_min.hz() + (static_cast<double>(k) + 0.5) * h;
        const double wavelength = profile.signal_speed / f;
        const double alpha2 = gains * wavelength * wavelength / (spreading * d_m * d_m);
        const double received_w = profile.tx_power.watts() * alpha2;
        acc += std::log2(1.0 + received_w / noise_w);
    }
    return profile.duty_cycle * static_cast<double>(acc * static_cast<long double>(h));
}

PowerWatts backsolve_tx_power(const LinkProfile& profile, double d_m, double target_capacity,
                              long long samples) {
    if (!(target_capacity > 0.0) || !std::isfinite(target_capacity))
        throw DomainError("backsolve_tx_power: target capacity must be > 0");

    LinkProfile trial = profile;
    auto capacity_at = [&](double log_p) {
        trial.tx_power = PowerWatts(std::exp(log_p));
        return oracle_capacity(trial, d_m, samples);
    };

    double lo = std::log(1e-6);
    double hi = std::log(1e3);
    if (capacity_at(lo) > target_capacity || capacity_at(hi) < target_capacity)
        throw DomainError("backsolve_tx_power: target " + std::to_string(target_capacity) +
                          " bit/s unreachable with P_T in [1e-6, 1e3] W");

    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (capacity_at(mid) < target_capacity)
            lo = mid;
        else
            hi = mid;
    }
    const double solved = std::exp(0.5 * (lo + hi));
    const double reached = capacity_at(std::log(solved));
    if (relative_error(target_capacity, reached) > 1e-6)
        throw DomainError("backsolve_tx_power: bisection did not converge");
    return PowerWatts(solved);
}

std::vector<OracleReport> verify_all_tables(GainModel gain_model, long long samples) {
    std::vector<OracleReport> reports;
    reports.reserve(kPublished.size());
    for (const auto& cell : kPublished) {
        const LinkProfile p = cell_profile(cell, gain_model);
        OracleReport r;
        r.target = std::string("table_") + cell.table + "[" + cell.column +
                   ",d=" + format_shortest(cell.distance_m) + "m]";
        r.published_value = cell.gbps * kBitsPerGbit;
        r.engine_value = binned_capacity(p, cell.distance_m).reported;
        r.oracle_value = oracle_capacity(p, cell.distance_m, samples);
        r.relative_error = relative_error(r.oracle_value, r.engine_value);
        r.published_error = relative_error(r.published_value, r.engine_value);
        r.passed = r.relative_error <= kTableTolerance && r.published_error <= kTableTolerance;
        reports.push_back(std::move(r));
    }
    return reports;
}

TxPowerCheck check_tx_power(GainModel gain_model, long long samples) {
    LinkProfile p = builtin_radcom();
    p.gain_model = gain_model;
    TxPowerCheck check;
    check.target_capacity = kPublished.front().gbps * kBitsPerGbit;
    try {
        check.solved_tx_power_w = backsolve_tx_power(p, 1.0, check.target_capacity, samples).watts();
    } catch (const DomainError&) {
        check.solved_tx_power_w = std::nan("");
    }
    check.passed = check.solved_tx_power_w >= 0.99 && check.solved_tx_power_w <= 1.01;
    return check;
}

}  // namespace isaccap
