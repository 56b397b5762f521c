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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "isaccap/capacity.hpp"
#include "isaccap/errors.hpp"
#include "isaccap/format.hpp"
#include "isaccap/oracle.hpp"
#include "isaccap/profiles.hpp"
#include "isaccap/report.hpp"
#include "isaccap/scenario.hpp"
#include "isaccap/sweep.hpp"

namespace isaccap::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Optional per-field overrides shared by `capacity` and ad-hoc `sweep`.
struct ProfileOverrides {
    double g_t_db = 0, g_r_db = 0, f_min_hz = 0, bw_hz = 0, noise_figure_db = 0;
    double duty_cycle = 0, tx_power_w = 0, temperature_k = 0;
    long long n_sc = 0;
    std::string gain_model;
    std::vector<std::pair<CLI::Option*, std::function<void(LinkProfile&)>>> setters;

    void attach(CLI::App& cmd) {
        add(cmd.add_option("--g-t-db", g_t_db, "Transmitter gain (dB)"),
            [this](LinkProfile& p) { p.g_t = Decibel(g_t_db); });
        add(cmd.add_option("--g-r-db", g_r_db, "Receiver gain (dB)"),
            [this](LinkProfile& p) { p.g_r = Decibel(g_r_db); });
        add(cmd.add_option("--f-min-hz", f_min_hz, "Band start (Hz)"),
            [this](LinkProfile& p) { p.f_min = Frequency(f_min_hz); });
        add(cmd.add_option("--bw-hz", bw_hz, "Bandwidth (Hz)"),
            [this](LinkProfile& p) { p.bandwidth = Frequency(bw_hz); });
        add(cmd.add_option("--n-sc", n_sc, "Number of OFDM bins"),
            [this](LinkProfile& p) { p.n_sc = n_sc; });
        add(cmd.add_option("--noise-figure-db", noise_figure_db, "Receiver noise figure (dB)"),
            [this](LinkProfile& p) { p.noise_figure = Decibel(noise_figure_db); });
        add(cmd.add_option("--duty-cycle", duty_cycle, "Fraction of time used for communication"),
            [this](LinkProfile& p) { p.duty_cycle = duty_cycle; });
        add(cmd.add_option("--tx-power-w", tx_power_w, "Transmit power (W)"),
            [this](LinkProfile& p) { p.tx_power = PowerWatts(tx_power_w); });
        add(cmd.add_option("--temperature-k", temperature_k, "Receiver temperature (K)"),
            [this](LinkProfile& p) { p.temperature_k = temperature_k; });
        add(cmd.add_option("--gain-model", gain_model, "paper_typeset or standard_friis")
                ->check(CLI::IsMember({"paper_typeset", "standard_friis"})),
            [this](LinkProfile& p) { p.gain_model = gain_model_from_string(gain_model); });
    }

    void apply(LinkProfile& p) const {
        for (const auto& [opt, set] : setters)
            if (opt->count()) set(p);
        validate(p);
    }

private:
    void add(CLI::Option* opt, std::function<void(LinkProfile&)> set) {
        setters.emplace_back(opt, std::move(set));
    }
};

std::optional<ScenarioFile> load_optional(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return load_scenario(path);
}

LinkProfile resolve_profile(const std::string& name, const std::optional<ScenarioFile>& scenario) {
    return scenario ? scenario->resolve(name) : resolve_builtin(name);
}

ReportFormat report_format(const std::string& name) {
    return name == "csv" ? ReportFormat::CSV : ReportFormat::AlignedText;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    file << text;
}

std::vector<double> distance_grid(double d_min, double d_max, double step) {
    if (!(d_min > 0.0) || !(d_max > d_min) || !(step > 0.0) || !std::isfinite(d_max))
        throw UsageError("need 0 < d-min < d-max and step > 0");
    const auto n = static_cast<std::size_t>(std::floor((d_max - d_min) / step + 1e-9)) + 1;
    if (n > 10'000'000) throw UsageError("distance grid too large");
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = d_min + static_cast<double>(i) * step;
    return grid;
}

Rounding rounding_from(const std::string& name) {
    return name == "truncate" ? Rounding::Truncate : Rounding::HalfEven;
}

CLI::Option* add_rounding(CLI::App& cmd, std::string& target) {
    return cmd.add_option("--rounding", target, "Last-digit rule: half-even or truncate")
        ->check(CLI::IsMember({"half-even", "truncate"}))
        ->capture_default_str();
}

std::string render_tables(const std::vector<PaperTable>& tables, ReportFormat format,
                          Rounding rounding) {
    std::string text;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const auto result = run_sweep(table_spec(tables[i]));
        if (i) text += "\n";
        text += render_table(result, format, table_title(tables[i]), rounding).str();
    }
    return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shannon capacity of ISAC links (automotive RadCom and 802.11bd)", "isaccap"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    // capacity
    auto* capacity = app.add_subcommand("capacity", "Capacity of one link at one distance");
    std::string cap_profile = "radcom", cap_scenario;
    double cap_distance = 0.0;
    bool cap_verbose = false;
    std::string rounding = "half-even";
    ProfileOverrides cap_overrides;
    capacity->add_option("--profile", cap_profile, "Built-in or scenario profile name")
        ->capture_default_str();
    capacity->add_option("--scenario", cap_scenario, "Scenario file defining extra profiles");
    capacity->add_option("--distance,--distance-m", cap_distance, "Link length (m)")->required();
    capacity->add_flag("-v,--verbose", cap_verbose, "Also print bounds and band-edge SNR");
    add_rounding(*capacity, rounding);
    cap_overrides.attach(*capacity);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Parameter sweep from a scenario file or flags");
    std::string sw_scenario, sw_name, sw_profile = "radcom", sw_parameter, sw_format,
                                      sw_output, sw_denominator = "first";
    std::vector<double> sw_grid, sw_distances = kDefaultDistances;
    unsigned sw_threads = 0;
    ProfileOverrides sw_overrides;
    sweep->add_option("--scenario", sw_scenario, "Scenario file; runs its sweeps");
    sweep->add_option("--name", sw_name, "Run only this sweep of the scenario");
    sweep->add_option("--profile", sw_profile, "Base profile for an ad-hoc sweep")
        ->capture_default_str();
    sweep->add_option("--parameter", sw_parameter, "Varied parameter (ad-hoc sweep)")
        ->check(CLI::IsMember(
            {"distance", "f_min", "n_sc", "bandwidth", "noise_figure", "duty_cycle"}));
    sweep->add_option("--grid", sw_grid, "Grid values, comma separated")->delimiter(',');
    sweep->add_option("--distances", sw_distances, "Distances (m), comma separated")
        ->delimiter(',');
    sweep->add_option("--denominator", sw_denominator, "Relative difference denominator")
        ->check(CLI::IsMember({"first", "second"}));
    sweep->add_option("--format", sw_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    sweep->add_option("--output", sw_output, "Write to this path instead of stdout");
    sweep->add_option("--threads", sw_threads, "Worker threads (0 = all cores)");
    add_rounding(*sweep, rounding);
    sw_overrides.attach(*sweep);

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "Regenerate the RadCom sensitivity tables");
    std::string rp_table = "all", rp_format = "text";
    reproduce->add_option("--table", rp_table, "III, IV, V, VI or all")
        ->check(CLI::IsMember({"III", "IV", "V", "VI", "all"}))
        ->capture_default_str();
    reproduce->add_option("--format", rp_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    add_rounding(*reproduce, rounding);

    // fig2
    auto* fig2 = app.add_subcommand("fig2", "Capacity vs distance for RadCom and 802.11bd");
    double f2_min = 1.0, f2_max = 200.0, f2_step = 1.0;
    std::string f2_svg, f2_format = "csv";
    fig2->add_option("--d-min", f2_min, "First distance (m)")->capture_default_str();
    fig2->add_option("--d-max", f2_max, "Last distance (m)")->capture_default_str();
    fig2->add_option("--step", f2_step, "Distance step (m)")->capture_default_str();
    fig2->add_option("--svg", f2_svg, "Also write an SVG line chart to this path");
    fig2->add_option("--format", f2_format, "csv or text")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    add_rounding(*fig2, rounding);

    // verify
    auto* verify = app.add_subcommand("verify", "Check every table cell against the oracle");
    std::string vf_gain = "paper_typeset";
    long long vf_samples = kOracleDefaultSamples;
    verify->add_option("--gain-model", vf_gain, "Gain model used for the RadCom profile")
        ->check(CLI::IsMember({"paper_typeset", "standard_friis"}))
        ->capture_default_str();
    verify->add_option("--samples", vf_samples, "Oracle midpoint samples (>= 100000)")
        ->check(CLI::Range(kOracleMinSamples, 1'000'000'000LL))
        ->capture_default_str();

    // profiles
    auto* profiles = app.add_subcommand("profiles", "Print profiles in scenario-file syntax");
    std::string pf_scenario;
    profiles->add_option("--scenario", pf_scenario, "Also print this scenario's profiles");

    std::vector<std::string> argv_store{"isaccap"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    const Rounding round = rounding_from(rounding);
    try {
        if (*capacity) {
            const auto scenario = load_optional(cap_scenario);
            LinkProfile p = resolve_profile(cap_profile, scenario);
            cap_overrides.apply(p);
            const auto est = binned_capacity(p, cap_distance);
            out << format_gbps(est.reported, round) << "\n";
            if (cap_verbose) {
                out << "lower_gbps=" << format_gbps(est.lower, round) << "\n"
                    << "upper_gbps=" << format_gbps(est.upper, round) << "\n"
                    << "n_bins=" << est.n_bins_used << "\n"
                    << "snr_f_min=" << format_shortest(snr(p, p.f_min, cap_distance)) << "\n"
                    << "snr_f_max="
                    << format_shortest(snr(p, Frequency(p.f_max_hz()), cap_distance)) << "\n";
            }
            return kSuccess;
        }

        if (*sweep) {
            const auto scenario = load_optional(sw_scenario);
            std::vector<std::pair<SweepSpec, LinkProfile>> jobs;
            if (!sw_parameter.empty()) {
                if (sw_grid.empty()) throw UsageError("--parameter needs --grid");
                SweepSpec spec;
                spec.name = "adhoc";
                spec.base_profile = sw_profile;
                spec.parameter = sweep_parameter_from_string(sw_parameter);
                spec.grid = sw_grid;
                spec.distances = sw_distances;
                spec.denominator = denominator_from_string(sw_denominator);
                LinkProfile base = resolve_profile(sw_profile, scenario);
                sw_overrides.apply(base);
                jobs.emplace_back(spec, base);
            } else if (scenario) {
                for (const auto& spec : scenario->sweeps)
                    if (sw_name.empty() || spec.name == sw_name)
                        jobs.emplace_back(spec, scenario->resolve(spec.base_profile));
                if (jobs.empty()) throw UsageError("no matching sweep in scenario");
            } else {
                throw UsageError("sweep needs --scenario or --parameter/--grid");
            }

            std::string format = sw_format;
            std::string path = sw_output;
            if (scenario && scenario->output) {
                if (format.empty() && scenario->output->format)
                    format = *scenario->output->format == OutputFormat::Csv ? "csv" : "text";
                if (path.empty() && scenario->output->path) path = *scenario->output->path;
            }
            std::string text;
            for (std::size_t i = 0; i < jobs.size(); ++i) {
                const auto& [spec, base] = jobs[i];
                const auto result = run_sweep(spec, base, SweepOptions{sw_threads});
                if (i) text += "\n";
                text += render_table(result, report_format(format),
                                     "Sweep " + spec.name + " over " +
                                         std::string(to_string(spec.parameter)) + " (" +
                                         spec.base_profile + ")",
                                     round)
                            .str();
            }
            write_output(text, path, out);
            return kSuccess;
        }

        if (*reproduce) {
            const auto tables = rp_table == "all"
                                    ? all_paper_tables()
                                    : std::vector<PaperTable>{*paper_table_from_string(rp_table)};
            out << render_tables(tables, report_format(rp_format), round);
            return kSuccess;
        }

        if (*fig2) {
            const auto grid = distance_grid(f2_min, f2_max, f2_step);
            const auto radcom = capacity_vs_distance(builtin_radcom(), grid);
            const auto wifi = capacity_vs_distance(builtin_wifi_bd(), grid);
            const auto format = f2_format == "csv" ? ReportFormat::PlotSeries
                                                   : ReportFormat::AlignedText;
            out << render_fig2_series(radcom, wifi, format, round).str();
            if (!f2_svg.empty()) write_output(render_fig2_svg(radcom, wifi), f2_svg, out);
            return kSuccess;
        }

        if (*verify) {
            const GainModel model = gain_model_from_string(vf_gain);
            const auto reports = verify_all_tables(model, vf_samples);
            const auto tx = check_tx_power(model, vf_samples);
            out << render_oracle_reports(reports, &tx).str();
            std::size_t passed = 0;
            for (const auto& r : reports) passed += r.passed ? 1 : 0;
            err << passed << "/" << reports.size() << " table cells within "
                << format_shortest(kTableTolerance) << " relative; back-solved P_T = "
                << format_fixed(tx.solved_tx_power_w, 4) << " W ("
                << (tx.passed ? "PASS" : "FAIL") << ")\n";
            return passed == reports.size() && tx.passed ? kSuccess : kVerificationFailed;
        }

        if (*profiles) {
            std::string text;
            for (const auto& p : builtin_profiles()) text += serialize_profile(p) + "\n";
            if (const auto scenario = load_optional(pf_scenario))
                for (const auto& p : scenario->profiles) text += serialize_profile(p) + "\n";
            out << text;
            return kSuccess;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ScenarioError& e) {
        err << "error: scenario " << e.what() << "\n";
        return kUsageError;
    } catch (const UnknownProfile& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace isaccap::cli
