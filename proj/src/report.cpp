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

#include "isaccap/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "isaccap/errors.hpp"
#include "isaccap/format.hpp"

namespace isaccap {
namespace {

std::string frequency_label(double hz) {
    if (hz >= 1e9) return format_shortest(hz / 1e9) + "GHz";
    if (hz >= 1e6) return format_shortest(hz / 1e6) + "MHz";
    return format_shortest(hz) + "Hz";
}

std::string grid_label(SweepParameter parameter, double value) {
    switch (parameter) {
        case SweepParameter::FMin: return "f_min=" + frequency_label(value);
        case SweepParameter::Bandwidth: return "bw=" + frequency_label(value);
        case SweepParameter::NSc: return "n_sc=" + format_shortest(value);
        case SweepParameter::NoiseFigure: return "F=" + format_shortest(value) + "dB";
        case SweepParameter::DutyCycle: return "delta=" + format_shortest(value);
        case SweepParameter::Distance: return "d=" + format_shortest(value) + "m";
    }
    return format_shortest(value);
}

std::string scientific(double value) {
    if (!std::isfinite(value)) return "nan";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::scientific, 3);
    return std::string(buf.data(), res.ptr);
}

std::string csv_header(const Column& c) {
    if (c.unit.empty()) return c.name;
    return c.name + "_" + (c.unit == "%" ? std::string("pct") : c.unit);
}

std::string text_header(const Column& c) {
    return c.unit.empty() ? c.name : c.name + " (" + c.unit + ")";
}

std::vector<double> distance_series(const SweepResult& r) {
    std::vector<double> out;
    out.reserve(r.rows.size());
    for (const auto& row : r.rows) out.push_back(row.distance_m);
    return out;
}

void check_fig2_inputs(const SweepResult& radcom, const SweepResult& wifi) {
    if (radcom.parameter != SweepParameter::Distance || wifi.parameter != SweepParameter::Distance)
        throw ReportError("capacity-vs-distance series need distance sweeps");
    if (radcom.rows.empty()) throw ReportError("empty capacity-vs-distance series");
    if (distance_series(radcom) != distance_series(wifi))
        throw ReportError("RadCom and WiFi series use different distance grids");
}

}  // namespace

std::string ReportDocument::str() const {
    std::ostringstream out;
    if (format == ReportFormat::AlignedText) {
        std::vector<std::size_t> width(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            width[c] = text_header(columns[c]).size();
            for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
        }
        auto emit = [&](const auto& cell_of) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                const std::string cell = cell_of(c);
                if (c) out << "  ";
                out << std::string(width[c] - cell.size(), ' ') << cell;
            }
            out << '\n';
        };
        if (!title.empty()) out << title << '\n';
        emit([&](std::size_t c) { return text_header(columns[c]); });
        for (const auto& row : rows) emit([&](std::size_t c) { return row[c]; });
        return out.str();
    }

    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_header(columns[c]);
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << '\n';
    }
    return out.str();
}

ReportDocument render_table(const SweepResult& result, ReportFormat format, std::string title,
                            Rounding rounding) {
    if (result.rows.empty()) throw ReportError("cannot render an empty sweep result");

    ReportDocument doc;
    doc.title = std::move(title);
    doc.format = format;
    doc.columns.push_back({"d", "m"});

    if (result.parameter == SweepParameter::Distance) {
        doc.columns.push_back({"C", "Gbps"});
        for (const auto& row : result.rows)
            doc.rows.push_back({format_shortest(row.distance_m), format_gbps(row.capacity.reported, rounding)});
        return doc;
    }

    for (double g : result.grid)
        doc.columns.push_back({"C[" + grid_label(result.parameter, g) + "]", "Gbps"});
    const bool with_diff = !result.relative_diff_pct.empty();
    if (with_diff) doc.columns.push_back({"dC/C", "%"});

    for (std::size_t j = 0; j < result.distances.size(); ++j) {
        std::vector<std::string> row{format_shortest(result.distances[j])};
        for (std::size_t i = 0; i < result.grid.size(); ++i)
            row.push_back(format_gbps(result.at(i, j).capacity.reported, rounding));
        if (with_diff) row.push_back(format_fixed(result.relative_diff_pct[j], 4, rounding));
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

ReportDocument render_fig2_series(const SweepResult& radcom, const SweepResult& wifi,
                                  ReportFormat format, Rounding rounding) {
    check_fig2_inputs(radcom, wifi);
    ReportDocument doc;
    doc.title = "Channel capacity vs distance, RadCom and 802.11bd (duty cycle as configured)";
    doc.format = format;
    doc.columns = {{"distance_m", ""}, {"radcom_gbps", ""}, {"wifi_bd_gbps", ""}};
    for (std::size_t i = 0; i < radcom.rows.size(); ++i)
        doc.rows.push_back({format_shortest(radcom.rows[i].distance_m),
                            format_gbps(radcom.rows[i].capacity.reported, rounding),
                            format_gbps(wifi.rows[i].capacity.reported, rounding)});
    return doc;
}

std::string render_fig2_svg(const SweepResult& radcom, const SweepResult& wifi) {
    check_fig2_inputs(radcom, wifi);

    constexpr double kWidth = 720, kHeight = 440;
    constexpr double kLeft = 70, kRight = 20, kTop = 30, kBottom = 60;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    const double d_lo = radcom.rows.front().distance_m;
    const double d_hi = std::max(radcom.rows.back().distance_m, d_lo + 1.0);
    double c_hi = 0.0;
    for (const auto* r : {&radcom, &wifi})
        for (const auto& row : r->rows) c_hi = std::max(c_hi, row.capacity.reported / kBitsPerGbit);
    c_hi = std::max(5.0, std::ceil(c_hi / 5.0) * 5.0);

    auto x_of = [&](double d) { return kLeft + (d - d_lo) / (d_hi - d_lo) * plot_w; };
    auto y_of = [&](double gbps) { return kTop + plot_h - gbps / c_hi * plot_h; };
    auto num = [](double v) { return format_fixed(v, 2); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes and grid.
    svg << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double y = kTop + plot_h * i / 5.0;
        svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\""
            << num(kLeft + plot_w) << "\" y2=\"" << num(y) << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
        << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
        << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
        << "</g>\n";
    for (int i = 0; i <= 5; ++i) {
        const double gbps = c_hi * i / 5.0;
        svg << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y_of(gbps) + 4)
            << "\" text-anchor=\"end\">" << format_shortest(gbps) << "</text>\n";
        const double d = d_lo + (d_hi - d_lo) * i / 5.0;
        svg << "<text x=\"" << num(x_of(d)) << "\" y=\"" << num(kTop + plot_h + 18)
            << "\" text-anchor=\"middle\">" << format_fixed(d, 0) << "</text>\n";
    }
    svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
        << "\" text-anchor=\"middle\">Distance between nodes (m)</text>\n"
        << "<text x=\"18\" y=\"" << num(kTop + plot_h / 2) << "\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 18 " << num(kTop + plot_h / 2)
        << ")\">Channel capacity (Gbps)</text>\n";

    const std::array<std::pair<const SweepResult*, const char*>, 2> series = {
        std::pair{&radcom, "#d62728"}, std::pair{&wifi, "#1f77b4"}};
    for (const auto& [result, colour] : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < result->rows.size(); ++i) {
            const auto& row = result->rows[i];
            svg << (i ? " " : "") << num(x_of(row.distance_m)) << ","
                << num(y_of(row.capacity.reported / kBitsPerGbit));
        }
        svg << "\"/>\n";
    }
    const double lx = kLeft + plot_w - 150;
    svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(kTop + 12) << "\" x2=\"" << num(lx + 24)
        << "\" y2=\"" << num(kTop + 12) << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(kTop + 16) << "\">802.11bd (60 GHz)</text>\n"
        << "<line x1=\"" << num(lx) << "\" y1=\"" << num(kTop + 30) << "\" x2=\"" << num(lx + 24)
        << "\" y2=\"" << num(kTop + 30) << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(kTop + 34) << "\">RadCom (76 GHz)</text>\n"
        << "</svg>\n";
    return svg.str();
}

ReportDocument render_oracle_reports(const std::vector<OracleReport>& reports,
                                     const TxPowerCheck* tx_power) {
    ReportDocument doc;
    doc.title = "Oracle verification";
    doc.format = ReportFormat::CSV;
    doc.columns = {{"target", ""},         {"published", ""},       {"engine", ""},
                   {"oracle", ""},         {"relative_error", ""},  {"published_error", ""},
                   {"status", ""}};
    for (const auto& r : reports)
        doc.rows.push_back({r.target, format_gbps(r.published_value), format_gbps(r.engine_value),
                            format_gbps(r.oracle_value), scientific(r.relative_error),
                            scientific(r.published_error), r.passed ? "PASS" : "FAIL"});
    if (tx_power) {
        // Watts instead of Gbps; "published" holds the expected 1 W.
        const double err = std::abs(tx_power->solved_tx_power_w - 1.0);
        doc.rows.push_back({"tx_power_w[radcom,d=1m]", format_fixed(1.0, 4),
                            format_fixed(tx_power->solved_tx_power_w, 4),
                            format_fixed(tx_power->solved_tx_power_w, 4), scientific(err),
                            scientific(err), tx_power->passed ? "PASS" : "FAIL"});
    }
    return doc;
}

}  // namespace isaccap
