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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isaccap/capacity.hpp"
#include "isaccap/errors.hpp"
#include "isaccap/format.hpp"
#include "isaccap/oracle.hpp"
#include "isaccap/profiles.hpp"
#include "isaccap/report.hpp"
#include "isaccap/scenario.hpp"
#include "isaccap/sweep.hpp"

namespace py = pybind11;
using namespace isaccap;

namespace {

ReportFormat report_format(const std::string& name) {
    if (name == "csv") return ReportFormat::CSV;
    if (name == "text") return ReportFormat::AlignedText;
    throw DomainError("format must be 'text' or 'csv'");
}

Rounding rounding_from(const std::string& name) {
    if (name == "half-even") return Rounding::HalfEven;
    if (name == "truncate") return Rounding::Truncate;
    throw DomainError("rounding must be 'half-even' or 'truncate'");
}

std::string reproduce_table(const std::string& table, const std::string& format,
                            const std::string& rounding) {
    const Rounding round = rounding_from(rounding);
    std::vector<PaperTable> tables;
    if (table == "all") {
        tables = all_paper_tables();
    } else if (auto t = paper_table_from_string(table)) {
        tables = {*t};
    } else {
        throw DomainError("unknown table '" + table + "' (expected III, IV, V, VI or all)");
    }
    std::string text;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i) text += "\n";
        text += render_table(run_sweep(table_spec(tables[i])), report_format(format),
                             table_title(tables[i]), round)
                    .str();
    }
    return text;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Shannon capacity of ISAC links (automotive RadCom and 802.11bd)";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);
    py::register_exception<UnknownProfile>(m, "UnknownProfile", PyExc_KeyError);
    py::register_exception<ReportError>(m, "ReportError", PyExc_ValueError);
    (void)domain_error;

    py::enum_<GainModel>(m, "GainModel")
        .value("PaperTypeset", GainModel::PaperTypeset)
        .value("StandardFriis", GainModel::StandardFriis);

    py::class_<LinkProfile>(m, "LinkProfile")
        .def(py::init<>())
        .def_readwrite("name", &LinkProfile::name)
        .def_property(
            "g_t_db", [](const LinkProfile& p) { return p.g_t.value(); },
            [](LinkProfile& p, double v) { p.g_t = Decibel(v); })
        .def_property(
            "g_r_db", [](const LinkProfile& p) { return p.g_r.value(); },
            [](LinkProfile& p, double v) { p.g_r = Decibel(v); })
        .def_property(
            "f_min_hz", [](const LinkProfile& p) { return p.f_min.hz(); },
            [](LinkProfile& p, double v) { p.f_min = Frequency(v); })
        .def_property(
            "bw_hz", [](const LinkProfile& p) { return p.bandwidth.hz(); },
            [](LinkProfile& p, double v) { p.bandwidth = Frequency(v); })
        .def_property_readonly("f_max_hz", &LinkProfile::f_max_hz)
        .def_readwrite("n_sc", &LinkProfile::n_sc)
        .def_property(
            "noise_figure_db", [](const LinkProfile& p) { return p.noise_figure.value(); },
            [](LinkProfile& p, double v) { p.noise_figure = Decibel(v); })
        .def_readwrite("duty_cycle", &LinkProfile::duty_cycle)
        .def_property(
            "tx_power_w", [](const LinkProfile& p) { return p.tx_power.watts(); },
            [](LinkProfile& p, double v) { p.tx_power = PowerWatts(v); })
        .def_readwrite("temperature_k", &LinkProfile::temperature_k)
        .def_readwrite("gain_model", &LinkProfile::gain_model)
        .def_readwrite("signal_speed", &LinkProfile::signal_speed)
        .def("validate", [](const LinkProfile& p) { validate(p); })
        .def("copy", [](const LinkProfile& p) { return p; })
        .def(py::self == py::self)
        .def("__repr__", [](const LinkProfile& p) {
            return "<LinkProfile '" + p.name + "' f_min=" + format_shortest(p.f_min.hz()) +
                   " Hz bw=" + format_shortest(p.bandwidth.hz()) + " Hz>";
        });

    py::class_<CapacityEstimate>(m, "CapacityEstimate")
        .def_readonly("lower", &CapacityEstimate::lower)
        .def_readonly("upper", &CapacityEstimate::upper)
        .def_readonly("reported", &CapacityEstimate::reported)
        .def_readonly("n_bins_used", &CapacityEstimate::n_bins_used)
        .def_readonly("duty_cycle_applied", &CapacityEstimate::duty_cycle_applied);

    m.def("db_to_linear", [](double x) { return db_to_linear(Decibel(x)); });
    m.def("linear_to_db", [](double r) { return linear_to_db(r).value(); });

    m.def("builtin_radcom", &builtin_radcom);
    m.def("builtin_wifi_bd", &builtin_wifi_bd);
    m.def("builtin_profile", &resolve_builtin, py::arg("name"));

    m.def(
        "path_power_gain",
        [](const LinkProfile& p, double f_hz, double d_m) {
            return path_power_gain(p, Frequency(f_hz), d_m);
        },
        py::arg("profile"), py::arg("f_hz"), py::arg("d_m"));
    m.def("noise_power", [](const LinkProfile& p) { return noise_power(p).watts(); });
    m.def(
        "snr", [](const LinkProfile& p, double f_hz, double d_m) { return snr(p, Frequency(f_hz), d_m); },
        py::arg("profile"), py::arg("f_hz"), py::arg("d_m"));

    m.def("binned_capacity", &binned_capacity, py::arg("profile"), py::arg("d_m"));
    m.def("continuous_capacity", &continuous_capacity, py::arg("profile"), py::arg("d_m"),
          py::arg("rel_tol") = 1e-11);
    m.def("apply_duty_cycle", &apply_duty_cycle, py::arg("c_full"), py::arg("delta"));
    m.def("effective_throughput", &effective_throughput, py::arg("c_full"), py::arg("delta"),
          py::arg("overhead_fraction"));

    m.def(
        "relative_diff",
        [](double a, double b, const std::string& denominator) {
            return relative_diff(a, b, denominator_from_string(denominator));
        },
        py::arg("c_a"), py::arg("c_b"), py::arg("denominator") = "first");

    m.def(
        "run_sweep",
        [](const LinkProfile& base, const std::string& parameter, std::vector<double> grid,
           std::vector<double> distances, const std::string& denominator, unsigned threads) {
            SweepSpec spec;
            spec.name = "python";
            spec.base_profile = base.name;
            spec.parameter = sweep_parameter_from_string(parameter);
            spec.grid = std::move(grid);
            spec.distances = std::move(distances);
            spec.denominator = denominator_from_string(denominator);
            const auto result = run_sweep(spec, base, SweepOptions{threads});
            py::list rows;
            for (const auto& r : result.rows)
                rows.append(py::make_tuple(r.grid_value, r.distance_m, r.capacity));
            py::dict out;
            out["rows"] = rows;
            out["relative_diff_pct"] = result.relative_diff_pct;
            return out;
        },
        py::arg("base"), py::arg("parameter"), py::arg("grid"),
        py::arg("distances") = kDefaultDistances, py::arg("denominator") = "first",
        py::arg("threads") = 0u);

    m.def(
        "capacity_vs_distance",
        [](const LinkProfile& profile, const std::vector<double>& d_grid) {
            std::vector<double> out;
            for (const auto& r : capacity_vs_distance(profile, d_grid).rows)
                out.push_back(r.capacity.reported);
            return out;
        },
        py::arg("profile"), py::arg("d_grid"));

    m.def("reproduce_table", &reproduce_table, py::arg("table") = "all",
          py::arg("format") = "csv", py::arg("rounding") = "half-even");

    m.def("oracle_capacity", &oracle_capacity, py::arg("profile"), py::arg("d_m"),
          py::arg("samples") = kOracleDefaultSamples);
    m.def(
        "backsolve_tx_power",
        [](const LinkProfile& p, double d_m, double target, long long samples) {
            return backsolve_tx_power(p, d_m, target, samples).watts();
        },
        py::arg("profile"), py::arg("d_m"), py::arg("target_capacity"),
        py::arg("samples") = kOracleDefaultSamples);
    m.def(
        "verify_all_tables",
        [](GainModel model, long long samples) {
            py::list out;
            for (const auto& r : verify_all_tables(model, samples)) {
                py::dict d;
                d["target"] = r.target;
                d["published_value"] = r.published_value;
                d["oracle_value"] = r.oracle_value;
                d["engine_value"] = r.engine_value;
                d["relative_error"] = r.relative_error;
                d["published_error"] = r.published_error;
                d["passed"] = r.passed;
                out.append(d);
            }
            return out;
        },
        py::arg("gain_model") = GainModel::PaperTypeset,
        py::arg("samples") = kOracleDefaultSamples);

    m.def(
        "parse_scenario",
        [](const std::string& text) {
            const auto file = parse_scenario(text);
            py::dict out;
            out["profiles"] = file.profiles;
            py::list sweeps;
            for (const auto& s : file.sweeps) {
                py::dict d;
                d["name"] = s.name;
                d["profile"] = s.base_profile;
                d["parameter"] = std::string(to_string(s.parameter));
                d["grid"] = s.grid;
                d["distances"] = s.distances;
                d["denominator"] = std::string(to_string(s.denominator));
                sweeps.append(d);
            }
            out["sweeps"] = sweeps;
            out["canonical"] = serialize_scenario(file);
            return out;
        },
        py::arg("text"));
}
