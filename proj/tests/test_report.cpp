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
#include <sstream>

#include "isaccap/errors.hpp"
#include "isaccap/format.hpp"
#include "isaccap/report.hpp"

using namespace isaccap;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
    return out;
}

}  // namespace

TEST_CASE("fixed formatting") {
    CHECK(format_fixed(22.207863441, 4) == "22.2079");
    CHECK(format_fixed(6.93201465, 4) == "6.9320");
    CHECK(format_fixed(-0.00001, 4) == "0.0000");
    CHECK(format_fixed(-83.14050676, 4) == "-83.1405");
    // Exactly representable ties round to even.
    CHECK(format_fixed(1.03125, 4) == "1.0312");
    CHECK(format_fixed(1.09375, 4) == "1.0938");
    CHECK(format_fixed(0.125, 2) == "0.12");
    CHECK(format_fixed(0.375, 2) == "0.38");
    CHECK(format_gbps(546.04e6) == "0.5460");
    CHECK(format_shortest(200.0) == "200");
    CHECK(format_shortest(0.1) == "0.1");
    CHECK(parse_double("1e9") == 1e9);
    CHECK(parse_double("+2.5") == 2.5);
    CHECK_FALSE(parse_double("1e9x").has_value());
    CHECK_FALSE(parse_double("").has_value());
}

TEST_CASE("table III csv") {
    const auto doc = render_table(run_sweep(table_spec(PaperTable::III)), ReportFormat::CSV);
    const auto lines = lines_of(doc.str());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "d_m,C[f_min=76GHz]_Gbps,C[f_min=81GHz]_Gbps,dC/C_pct");
    CHECK(lines[1] == "1,22.2079,22.0252,0.8226");
    CHECK(doc.rows.size() == 3);
    for (const auto& row : doc.rows) CHECK(row.size() == doc.columns.size());
}

TEST_CASE("table VI d = 200 row") {
    const auto doc = render_table(run_sweep(table_spec(PaperTable::VI)), ReportFormat::CSV);
    CHECK(lines_of(doc.str())[3] == "200,6.9320,6.2745,10.4787");
}

TEST_CASE("csv re-parses to the source values within 4 decimals") {
    SweepSpec s;
    s.base_profile = "wifi_bd";
    s.parameter = SweepParameter::NoiseFigure;
    s.grid = {5.0, 7.5, 9.0};
    s.distances = {1.0, 2.5, 33.0, 150.0};
    const auto r = run_sweep(s);
    const auto lines = lines_of(render_table(r, ReportFormat::CSV).str());
    REQUIRE(lines.size() == 5);
    for (std::size_t j = 0; j < 4; ++j) {
        const auto cells = split_csv(lines[j + 1]);
        REQUIRE(cells.size() == 4);
        CHECK(*parse_double(cells[0]) == s.distances[j]);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(std::abs(*parse_double(cells[i + 1]) - r.at(i, j).capacity.reported / 1e9) <=
                  0.5e-4 + 1e-12);
    }
}

TEST_CASE("single-row result renders header plus one row") {
    SweepSpec s;
    s.base_profile = "radcom";
    s.parameter = SweepParameter::Distance;
    s.grid = {1.0};
    const auto doc = render_table(run_sweep(s), ReportFormat::CSV);
    CHECK(doc.str() == "d_m,C_Gbps\n1,22.2079\n");
}

TEST_CASE("aligned text") {
    const auto doc =
        render_table(run_sweep(table_spec(PaperTable::V)), ReportFormat::AlignedText, "Title");
    const auto lines = lines_of(doc.str());
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "Title");
    for (std::size_t i = 2; i < lines.size(); ++i) CHECK(lines[i].size() == lines[1].size());
    CHECK(doc.str().find('\t') == std::string::npos);
    CHECK(lines[4].substr(lines[4].size() - 8) == "-79.0647");
}

TEST_CASE("rendering is pure") {
    const auto r = run_sweep(table_spec(PaperTable::IV));
    CHECK(render_table(r, ReportFormat::CSV).str() == render_table(r, ReportFormat::CSV).str());
    CHECK(render_table(r, ReportFormat::CSV) == render_table(r, ReportFormat::CSV));
}

TEST_CASE("empty result is rejected") {
    CHECK_THROWS_AS(render_table(SweepResult{}, ReportFormat::CSV), ReportError);
}

TEST_CASE("fig2 series") {
    const auto radcom = capacity_vs_distance("radcom", {1.0, 50.0, 200.0});
    const auto wifi = capacity_vs_distance("wifi_bd", {1.0, 50.0, 200.0});
    const auto doc = render_fig2_series(radcom, wifi);
    const auto lines = lines_of(doc.str());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "distance_m,radcom_gbps,wifi_bd_gbps");
    CHECK(lines[1] == "1,22.2079,31.1670");
    CHECK(lines[2] == "50,10.9209,16.7189");
    CHECK(lines[3].rfind("200,6.9320,", 0) == 0);

    const auto shorter = capacity_vs_distance("wifi_bd", {1.0, 50.0});
    CHECK_THROWS_AS(render_fig2_series(radcom, shorter), ReportError);
    const auto shifted = capacity_vs_distance("wifi_bd", {1.0, 51.0, 200.0});
    CHECK_THROWS_AS(render_fig2_series(radcom, shifted), ReportError);

    const std::string svg = render_fig2_svg(radcom, wifi);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("<script") == std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}
