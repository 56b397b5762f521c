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

#include "isaccap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "isaccap/errors.hpp"
#include "isaccap/profiles.hpp"

namespace isaccap {
namespace {

struct Job {
    LinkProfile profile;
    double distance_m;
};

void check_distances(const std::vector<double>& distances) {
    if (distances.empty()) throw DomainError("sweep needs at least one distance");
    for (double d : distances)
        if (!std::isfinite(d) || d <= 0.0)
            throw DomainError("distance must be finite and > 0 m, got " + std::to_string(d));
}

// Evaluates every job; output order matches input order regardless of the
// number of workers.
std::vector<CapacityEstimate> evaluate(const std::vector<Job>& jobs, unsigned threads) {
    std::vector<CapacityEstimate> out(jobs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));

    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            out[i] = binned_capacity(jobs[i].profile, jobs[i].distance_m);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs.size());
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < jobs.size(); i = next++) {
                    try {
                        out[i] = binned_capacity(jobs[i].profile, jobs[i].distance_m);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace

std::string_view to_string(SweepParameter p) noexcept {
    switch (p) {
        case SweepParameter::Distance: return "distance";
        case SweepParameter::FMin: return "f_min";
        case SweepParameter::NSc: return "n_sc";
        case SweepParameter::Bandwidth: return "bandwidth";
        case SweepParameter::NoiseFigure: return "noise_figure";
        case SweepParameter::DutyCycle: return "duty_cycle";
    }
    return "distance";
}

SweepParameter sweep_parameter_from_string(std::string_view text) {
    for (auto p : {SweepParameter::Distance, SweepParameter::FMin, SweepParameter::NSc,
                   SweepParameter::Bandwidth, SweepParameter::NoiseFigure,
                   SweepParameter::DutyCycle})
        if (text == to_string(p)) return p;
    throw DomainError("unknown sweep parameter '" + std::string(text) +
                      "' (expected distance, f_min, n_sc, bandwidth, noise_figure, duty_cycle)");
}

std::string_view to_string(Denominator d) noexcept {
    return d == Denominator::First ? "first" : "second";
}

Denominator denominator_from_string(std::string_view text) {
    if (text == "first") return Denominator::First;
    if (text == "second") return Denominator::Second;
    throw DomainError("denominator must be 'first' or 'second', got '" + std::string(text) + "'");
}

const SweepRow& SweepResult::at(std::size_t grid_index, std::size_t distance_index) const {
    if (parameter == SweepParameter::Distance) return rows.at(grid_index);
    return rows.at(grid_index * distances.size() + distance_index);
}

LinkProfile resolve_builtin(const std::string& name) {
    if (auto p = find_builtin(name)) return *p;
    throw UnknownProfile(name);
}

LinkProfile with_parameter(LinkProfile base, SweepParameter parameter, double value) {
    auto invalid = [&](const char* field, const std::string& why) {
        return InvalidProfile(field, why + ", got " + std::to_string(value));
    };
    switch (parameter) {
        case SweepParameter::Distance:
            if (!std::isfinite(value) || value <= 0.0)
                throw DomainError("distance must be finite and > 0 m, got " + std::to_string(value));
            break;
        case SweepParameter::FMin:
            if (!std::isfinite(value) || value <= 0.0) throw invalid("f_min_hz", "must be > 0");
            base.f_min = Frequency(value);
            break;
        case SweepParameter::NSc:
            if (!(value >= 1.0) || value != std::floor(value) ||
                value > static_cast<double>(std::numeric_limits<int>::max()))
                throw invalid("n_sc", "must be a positive integer");
            base.n_sc = static_cast<long long>(value);
            break;
        case SweepParameter::Bandwidth:
            if (!std::isfinite(value) || value <= 0.0) throw invalid("bw_hz", "must be > 0");
            base.bandwidth = Frequency(value);
            break;
        case SweepParameter::NoiseFigure:
            if (!std::isfinite(value)) throw invalid("noise_figure_db", "must be finite");
            base.noise_figure = Decibel(value);
            break;
        case SweepParameter::DutyCycle:
            base.duty_cycle = value;
            break;
    }
    validate(base);
    return base;
}

double relative_diff(double c_a, double c_b, Denominator denominator) {
    const double denom = denominator == Denominator::First ? c_a : c_b;
    if (!(denom > 0.0)) throw DomainError("relative_diff: denominator must be > 0");
    return 100.0 * (c_a - c_b) / denom;
}

SweepResult run_sweep(const SweepSpec& spec, const LinkProfile& base, SweepOptions options) {
    if (spec.grid.empty()) throw DomainError("sweep '" + spec.name + "' has an empty grid");
    validate(base);

    SweepResult result;
    result.parameter = spec.parameter;
    result.grid = spec.grid;
    result.denominator = spec.denominator;

    std::vector<Job> jobs;
    if (spec.parameter == SweepParameter::Distance) {
        check_distances(spec.grid);
        result.distances = spec.grid;
        for (double d : spec.grid) jobs.push_back({base, d});
    } else {
        check_distances(spec.distances);
        result.distances = spec.distances;
        for (double g : spec.grid) {
            const LinkProfile varied = with_parameter(base, spec.parameter, g);
            for (double d : spec.distances) jobs.push_back({varied, d});
        }
    }

    const auto estimates = evaluate(jobs, options.threads);
    result.rows.reserve(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const double g = spec.parameter == SweepParameter::Distance
                             ? jobs[i].distance_m
                             : spec.grid[i / spec.distances.size()];
        result.rows.push_back({g, jobs[i].distance_m, estimates[i]});
    }

    if (spec.parameter != SweepParameter::Distance && spec.grid.size() == 2) {
        for (std::size_t j = 0; j < result.distances.size(); ++j) {
            const double a = result.at(0, j).capacity.reported;
            const double b = result.at(1, j).capacity.reported;
            const double denom = spec.denominator == Denominator::First ? a : b;
            result.relative_diff_pct.push_back(denom > 0.0
                                                   ? relative_diff(a, b, spec.denominator)
                                                   : std::numeric_limits<double>::quiet_NaN());
        }
    }
    return result;
}

SweepResult run_sweep(const SweepSpec& spec, const ProfileResolver& resolve, SweepOptions options) {
    return run_sweep(spec, resolve(spec.base_profile), options);
}

SweepResult capacity_vs_distance(const LinkProfile& profile, const std::vector<double>& d_grid,
                                 SweepOptions options) {
    check_distances(d_grid);
    if (!std::is_sorted(d_grid.begin(), d_grid.end()))
        throw DomainError("capacity_vs_distance: distance grid must be ascending");
    SweepSpec spec;
    spec.name = profile.name + "_vs_distance";
    spec.base_profile = profile.name;
    spec.parameter = SweepParameter::Distance;
    spec.grid = d_grid;
    return run_sweep(spec, profile, options);
}

SweepResult capacity_vs_distance(const std::string& profile, const std::vector<double>& d_grid,
                                 const ProfileResolver& resolve, SweepOptions options) {
    return capacity_vs_distance(resolve(profile), d_grid, options);
}

std::string_view to_string(PaperTable t) noexcept {
    switch (t) {
        case PaperTable::III: return "III";
        case PaperTable::IV: return "IV";
        case PaperTable::V: return "V";
        case PaperTable::VI: return "VI";
    }
    return "III";
}

std::optional<PaperTable> paper_table_from_string(std::string_view text) {
    for (auto t : all_paper_tables())
        if (text == to_string(t)) return t;
    return std::nullopt;
}

std::vector<PaperTable> all_paper_tables() {
    return {PaperTable::III, PaperTable::IV, PaperTable::V, PaperTable::VI};
}

SweepSpec table_spec(PaperTable table) {
    SweepSpec spec;
    spec.base_profile = "radcom";
    spec.distances = kDefaultDistances;
    switch (table) {
        case PaperTable::III:
            spec.name = "table_III";
            spec.parameter = SweepParameter::FMin;
            spec.grid = {76e9, 81e9};
            spec.denominator = Denominator::First;
            break;
        case PaperTable::IV:
            spec.name = "table_IV";
            spec.parameter = SweepParameter::NSc;
            spec.grid = {1e2, 1e4};
            spec.denominator = Denominator::First;
            break;
        case PaperTable::V:
            spec.name = "table_V";
            spec.parameter = SweepParameter::Bandwidth;
            spec.grid = {150e6, 1e9};
            spec.denominator = Denominator::Second;
            break;
        case PaperTable::VI:
            spec.name = "table_VI";
            spec.parameter = SweepParameter::NoiseFigure;
            spec.grid = {8.0, 10.0};
            spec.denominator = Denominator::Second;
            break;
    }
    return spec;
}

std::string table_title(PaperTable table) {
    switch (table) {
        case PaperTable::III: return "Table III: RadCom capacity, f_min = 76 GHz vs 81 GHz";
        case PaperTable::IV: return "Table IV: RadCom capacity (lower bound), N_CS = 10^2 vs 10^4";
        case PaperTable::V: return "Table V: RadCom capacity, BW = 150 MHz vs 1 GHz";
        case PaperTable::VI: return "Table VI: RadCom capacity, F = 8 dB vs 10 dB";
    }
    return {};
}

}  // namespace isaccap
