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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isaccap/capacity.hpp"

namespace isaccap {

enum class SweepParameter { Distance, FMin, NSc, Bandwidth, NoiseFigure, DutyCycle };

std::string_view to_string(SweepParameter p) noexcept;
SweepParameter sweep_parameter_from_string(std::string_view text);

/// Which capacity divides the difference in a relative-difference column.
enum class Denominator { First, Second };

std::string_view to_string(Denominator d) noexcept;
Denominator denominator_from_string(std::string_view text);

inline const std::vector<double> kDefaultDistances{1.0, 50.0, 200.0};

/// One-parameter sweep. Grid units follow the scenario keys: Hz for f_min
/// and bandwidth, dB for noise_figure, metres for distance.
struct SweepSpec {
    std::string name;
    std::string base_profile;
    SweepParameter parameter = SweepParameter::Distance;
    std::vector<double> grid;
    std::vector<double> distances = kDefaultDistances;
    Denominator denominator = Denominator::First;

    bool operator==(const SweepSpec&) const = default;
};

struct SweepRow {
    double grid_value;
    double distance_m;
    CapacityEstimate capacity;

    bool operator==(const SweepRow&) const = default;
};

/// Rows are grid-major: all distances for grid[0], then grid[1], ...
/// For distance sweeps the grid values are themselves the distances.
struct SweepResult {
    SweepParameter parameter = SweepParameter::Distance;
    std::vector<double> grid;
    std::vector<double> distances;
    std::vector<SweepRow> rows;
    Denominator denominator = Denominator::First;
    /// Per distance, ΔC/C (%) between grid[0] and grid[1]; empty unless
    /// the grid has exactly two values.
    std::vector<double> relative_diff_pct;

    const SweepRow& at(std::size_t grid_index, std::size_t distance_index) const;

    bool operator==(const SweepResult&) const = default;
};

struct SweepOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

using ProfileResolver = std::function<LinkProfile(const std::string&)>;

/// Resolves only the built-in profiles; throws UnknownProfile otherwise.
LinkProfile resolve_builtin(const std::string& name);

/// Copy of `base` with `parameter` set to `value` (validated).
LinkProfile with_parameter(LinkProfile base, SweepParameter parameter, double value);

SweepResult run_sweep(const SweepSpec& spec, const LinkProfile& base, SweepOptions options = {});
SweepResult run_sweep(const SweepSpec& spec, const ProfileResolver& resolve = resolve_builtin,
                      SweepOptions options = {});

/// First -> 100 (a - b) / a; Second -> 100 (a - b) / b.
double relative_diff(double c_a, double c_b, Denominator denominator);

SweepResult capacity_vs_distance(const LinkProfile& profile, const std::vector<double>& d_grid,
                                 SweepOptions options = {});
SweepResult capacity_vs_distance(const std::string& profile, const std::vector<double>& d_grid,
                                 const ProfileResolver& resolve = resolve_builtin,
                                 SweepOptions options = {});

/// The published sensitivity tables.
enum class PaperTable { III, IV, V, VI };

std::string_view to_string(PaperTable t) noexcept;
std::optional<PaperTable> paper_table_from_string(std::string_view text);
std::vector<PaperTable> all_paper_tables();

/// Sweep that regenerates a table over the built-in RadCom profile.
SweepSpec table_spec(PaperTable table);
std::string table_title(PaperTable table);

}  // namespace isaccap
