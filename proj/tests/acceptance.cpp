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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "isaccap/capacity.hpp"
#include "isaccap/oracle.hpp"
#include "isaccap/profiles.hpp"
#include "isaccap/sweep.hpp"

using namespace isaccap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

// Published capacities (Gbps) per grid column and distance, plus ΔC/C (%).
struct TableExpectation {
    PaperTable table;
    double gbps[2][3];
    double diff_pct[3];
};

const TableExpectation kTables[] = {
    {PaperTable::III, {{22.2078, 10.9208, 6.9320}, {22.0251, 10.7383, 6.7509}},
     {0.8226, 1.6718, 2.6123}},
    {PaperTable::IV, {{22.2076, 10.9207, 6.9318}, {22.2078, 10.9208, 6.9320}},
     {-0.0008, -0.0017, -0.0026}},
    {PaperTable::V, {{3.7441, 2.0509, 1.4512}, {22.2078, 10.9208, 6.9320}},
     {-83.1405, -81.2195, -79.0646}},
    {PaperTable::VI, {{22.2078, 10.9208, 6.9320}, {21.5434, 10.2569, 6.2745}},
     {3.0839, 6.4731, 10.4787}},
};

std::string check_table(const TableExpectation& t, std::string& detail) {
    const auto r = run_sweep(table_spec(t.table));
    double worst_rel = 0.0, worst_pp = 0.0;
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t d = 0; d < 3; ++d) {
            const double expected = t.gbps[g][d] * 1e9;
            worst_rel = std::max(worst_rel, std::abs(r.at(g, d).capacity.reported - expected) /
                                                expected);
        }
    for (std::size_t d = 0; d < 3; ++d)
        worst_pp = std::max(worst_pp, std::abs(r.relative_diff_pct[d] - t.diff_pct[d]));
    char buf[128];
    std::snprintf(buf, sizeof buf, "max rel err %.2e, max dC/C err %.2e pp", worst_rel, worst_pp);
    detail = buf;
    return worst_rel <= 5e-4 && worst_pp <= 1e-3 ? "" : "tolerance exceeded";
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

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Table III reproduction",
         [](std::string& detail) {
             const auto start = Clock::now();
             const bool ok = check_table(kTables[0], detail).empty();
             const double t = seconds_since(start);
             detail += ", " + std::to_string(t) + " s";
             return ok && t < 1.0;
         }},
        {2, "Table IV reproduction",
         [](std::string& detail) {
             bool ok = check_table(kTables[1], detail).empty();
             const auto r = run_sweep(table_spec(PaperTable::IV));
             for (double pct : r.relative_diff_pct) ok = ok && std::abs(pct) < 0.003;
             return ok;
         }},
        {3, "Table V reproduction",
         [](std::string& detail) { return check_table(kTables[2], detail).empty(); }},
        {4, "Table VI reproduction",
         [](std::string& detail) { return check_table(kTables[3], detail).empty(); }},
        {5, "Transmit-power back-solve",
         [](std::string& detail) {
             const auto typeset = check_tx_power(GainModel::PaperTypeset);
             const auto friis = check_tx_power(GainModel::StandardFriis);
             LinkProfile p = builtin_radcom();
             p.gain_model = GainModel::StandardFriis;
             const double friis_w = backsolve_tx_power(p, 1.0, typeset.target_capacity).watts();
             const double four_pi = 4.0 * 3.14159265358979323846;
             char buf[160];
             std::snprintf(buf, sizeof buf, "P_T %.6f W (typeset gain), %.6f W (Friis, 4pi = %.6f)",
                           typeset.solved_tx_power_w, friis_w, four_pi);
             detail = buf;
             return typeset.passed && !friis.passed && rel_close(friis_w, four_pi, 1e-2);
         }},
        {6, "Capacity-vs-distance properties",
         [](std::string& detail) {
             const auto start = Clock::now();
             std::vector<double> grid;
             for (int d = 1; d <= 200; ++d) grid.push_back(d);
             const auto radcom = capacity_vs_distance("radcom", grid);
             const auto wifi = capacity_vs_distance("wifi_bd", grid);
             const double t = seconds_since(start);
             bool above = true, decreasing = true, fast_links = true;
             for (std::size_t i = 0; i < grid.size(); ++i) {
                 const double cr = radcom.rows[i].capacity.reported;
                 const double cw = wifi.rows[i].capacity.reported;
                 above = above && cw > cr;
                 if (i > 0)
                     decreasing = decreasing && cr < radcom.rows[i - 1].capacity.reported &&
                                  cw < wifi.rows[i - 1].capacity.reported;
                 if (grid[i] <= 50.0) fast_links = fast_links && cr > 10e9 && cw > 10e9;
             }
             detail = std::string("wifi>radcom ") + (above ? "yes" : "no") + ", decreasing " +
                      (decreasing ? "yes" : "no") + ", >10 Gbps to 50 m " +
                      (fast_links ? "yes" : "no") + ", " + std::to_string(t) + " s";
             return above && decreasing && fast_links && t < 5.0;
         }},
        {7, "Duty-cycle and overhead discount",
         [](std::string& detail) {
             const double eff = effective_throughput(10.9208e9, 0.1, 0.5);
             char buf[96];
             std::snprintf(buf, sizeof buf, "%.4f Mbps, %.1fx above 6 Mbps", eff / 1e6, eff / 6e6);
             detail = buf;
             return std::abs(eff - 546.04e6) <= 0.01e6 && eff > 100e6 && eff > 90 * 6e6;
         }},
        {8, "Bound sandwich, gap halving, duty-cycle linearity",
         [](std::string& detail) {
             std::mt19937_64 rng(8);
             int failures = 0, checks = 0;
             for (int i = 0; i < 50; ++i) {
                 const LinkProfile p = random_profile(rng);
                 LinkProfile doubled = p;
                 doubled.n_sc = 2 * p.n_sc;
                 LinkProfile full = p;
                 full.duty_cycle = 1.0;
                 for (double d : {1.0, 10.0, 100.0}) {
                     const auto est = binned_capacity(p, d);
                     const double exact = oracle_capacity(p, d, 200'000);
                     const auto finer = binned_capacity(doubled, d);
                     const double c_full = binned_capacity(full, d).reported;
                     const bool ok =
                         est.lower <= exact && exact <= est.upper &&
                         finer.gap() <= 0.5 * est.gap() + 1e-12 * est.upper &&
                         rel_close(est.reported, p.duty_cycle * c_full, 1e-12);
                     ++checks;
                     failures += ok ? 0 : 1;
                 }
             }
             detail = std::to_string(checks - failures) + "/" + std::to_string(checks) +
                      " profile-distance pairs";
             return failures == 0;
         }},
        {9, "Engine integral vs independent oracle",
         [](std::string& detail) {
             double worst = 0.0;
             int n = 0;
             for (const auto t : all_paper_tables()) {
                 const auto spec = table_spec(t);
                 for (double g : spec.grid) {
                     const LinkProfile p = with_parameter(builtin_radcom(), spec.parameter, g);
                     for (double d : spec.distances) {
                         worst = std::max(worst, std::abs(continuous_capacity(p, d) -
                                                          oracle_capacity(p, d)) /
                                                     oracle_capacity(p, d));
                         ++n;
                     }
                 }
             }
             std::mt19937_64 rng(9);
             for (int i = 0; i < 20; ++i) {
                 const LinkProfile p = random_profile(rng);
                 const double d = std::pow(10.0, std::uniform_real_distribution<double>(0, 2.5)(rng));
                 const double oracle = oracle_capacity(p, d);
                 worst = std::max(worst, std::abs(continuous_capacity(p, d) - oracle) / oracle);
                 ++n;
             }
             char buf[96];
             std::snprintf(buf, sizeof buf, "%d cases, max rel diff %.2e", n, worst);
             detail = buf;
             return worst <= 1e-6;
         }},
        {10, "Golden byte-level table output",
         [](std::string& detail) {
             const std::vector<std::string> args{"reproduce", "--table", "all", "--format", "csv"};
             int code_a = 0, code_b = 0;
             const std::string a = run_cli(args, code_a);
             const std::string b = run_cli(args, code_b);
             std::ifstream in(std::string(ISACCAP_GOLDEN_DIR) + "/reproduce_all.csv",
                              std::ios::binary);
             const std::string golden{std::istreambuf_iterator<char>(in),
                                      std::istreambuf_iterator<char>()};
             detail = std::to_string(a.size()) + " bytes, golden " + std::to_string(golden.size()) +
                      " bytes";
             return code_a == 0 && code_b == 0 && !golden.empty() && a == b && a == golden;
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        failed += ok ? 0 : 1;
        std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
