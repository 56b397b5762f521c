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

#include <string>
#include <vector>

#include "isaccap/format.hpp"
#include "isaccap/oracle.hpp"
#include "isaccap/sweep.hpp"

namespace isaccap {

enum class ReportFormat { AlignedText, CSV, PlotSeries };

struct Column {
    std::string name;
    std::string unit;  // empty for dimensionless columns

    bool operator==(const Column&) const = default;
};

/// A rendered table. Cells are already formatted text; `str()` lays them
/// out. CSV and PlotSeries emit a header row and LF line endings; aligned
/// text adds the title and right-aligns with spaces.
struct ReportDocument {
    std::string title;
    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;
    ReportFormat format = ReportFormat::CSV;

    std::string str() const;
    bool operator==(const ReportDocument&) const = default;
};

/// Capacity table pivoted by distance: one Gbps column per grid value and,
/// for two-value grids, a ΔC/C (%) column.
ReportDocument render_table(const SweepResult& result, ReportFormat format,
                            std::string title = {}, Rounding rounding = Rounding::HalfEven);

/// distance_m, radcom_gbps, wifi_bd_gbps
ReportDocument render_fig2_series(const SweepResult& radcom, const SweepResult& wifi,
                                  ReportFormat format = ReportFormat::PlotSeries,
                                  Rounding rounding = Rounding::HalfEven);

/// Static SVG 1.1 line chart of the two capacity-vs-distance series.
std::string render_fig2_svg(const SweepResult& radcom, const SweepResult& wifi);

ReportDocument render_oracle_reports(const std::vector<OracleReport>& reports,
                                     const TxPowerCheck* tx_power = nullptr);

}  // namespace isaccap
