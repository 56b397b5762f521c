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

#include "isaccap/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "isaccap/errors.hpp"
#include "isaccap/format.hpp"
#include "isaccap/profiles.hpp"

namespace isaccap {
namespace {

constexpr std::string_view kWhitespace = " \t";

struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
    std::size_t key_column;
    std::size_t value_column;
};

enum class SectionType { Profile, Sweep, Output };

struct Section {
    SectionType type;
    std::string name;
    std::size_t line;
    std::vector<Entry> entries;

    const Entry* find(std::string_view key) const {
        for (const auto& e : entries)
            if (e.key == key) return &e;
        return nullptr;
    }
};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(kWhitespace);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(kWhitespace);
    return s.substr(b, e - b + 1);
}

bool is_key(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

bool is_name(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '-' || c == '.';
    });
}

[[noreturn]] void fail(ScenarioErrorKind kind, std::size_t line, std::size_t column,
                       std::string field, const std::string& message) {
    throw ScenarioError(kind, line, column, std::move(field), message);
}

[[noreturn]] void invariant(const Entry& e, const std::string& message) {
    fail(ScenarioErrorKind::Invariant, e.line, e.value_column, e.key, message);
}

double number(const Entry& e) {
    const auto v = parse_double(e.value);
    if (!v) fail(ScenarioErrorKind::Syntax, e.line, e.value_column, e.key,
                 "expected a number, got '" + e.value + "'");
    if (!std::isfinite(*v)) invariant(e, "value must be finite");
    return *v;
}

long long integer(const Entry& e) {
    const double v = number(e);
    if (v != std::floor(v) || std::abs(v) > 9.0e15)
        fail(ScenarioErrorKind::Syntax, e.line, e.value_column, e.key,
             "expected an integer, got '" + e.value + "'");
    return static_cast<long long>(v);
}

std::vector<double> number_list(const Entry& e) {
    std::string_view v = e.value;
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        fail(ScenarioErrorKind::Syntax, e.line, e.value_column, e.key,
             "expected a list like [1, 50, 200]");
    v = trim(v.substr(1, v.size() - 2));
    std::vector<double> out;
    if (v.empty()) return out;
    std::size_t offset = 0;
    while (true) {
        const auto comma = v.find(',', offset);
        const auto item = trim(v.substr(offset, comma == std::string_view::npos ? v.npos
                                                                                 : comma - offset));
        const auto parsed = parse_double(item);
        if (!parsed)
            fail(ScenarioErrorKind::Syntax, e.line, e.value_column, e.key,
                 "expected a number in list, got '" + std::string(item) + "'");
        if (!std::isfinite(*parsed)) invariant(e, "list values must be finite");
        out.push_back(*parsed);
        if (comma == std::string_view::npos) break;
        offset = comma + 1;
    }
    return out;
}

std::vector<Section> split_sections(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<Section> sections;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto first = raw.find_first_not_of(kWhitespace);
        if (first == std::string_view::npos) continue;
        const std::size_t column = first + 1;
        const auto content = trim(raw);

        if (content.front() == '[') {
            if (content.back() != ']')
                fail(ScenarioErrorKind::Syntax, line_no, column, {}, "unterminated section header");
            const auto inner = trim(content.substr(1, content.size() - 2));
            const auto space = inner.find_first_of(kWhitespace);
            const auto type = inner.substr(0, space);
            const auto name = space == std::string_view::npos ? std::string_view{}
                                                              : trim(inner.substr(space));
            Section s{SectionType::Output, std::string(name), line_no, {}};
            if (type == "profile")
                s.type = SectionType::Profile;
            else if (type == "sweep")
                s.type = SectionType::Sweep;
            else if (type == "output")
                s.type = SectionType::Output;
            else
                fail(ScenarioErrorKind::Syntax, line_no, column + 1, std::string(type),
                     "unknown section type '" + std::string(type) +
                         "' (expected profile, sweep or output)");
            if (s.type == SectionType::Output && !name.empty())
                fail(ScenarioErrorKind::Syntax, line_no, column, "output",
                     "[output] takes no name");
            if (s.type != SectionType::Output && !is_name(name))
                fail(ScenarioErrorKind::Syntax, line_no, column, std::string(type),
                     "section needs a name made of letters, digits, '_', '-' or '.'");
            for (const auto& other : sections)
                if (other.type == s.type && other.name == s.name)
                    fail(ScenarioErrorKind::Syntax, line_no, column, s.name,
                         "duplicate section '" + std::string(type) + " " + s.name + "'");
            sections.push_back(std::move(s));
            continue;
        }

        const auto eq = raw.find('=');
        if (eq == std::string_view::npos)
            fail(ScenarioErrorKind::Syntax, line_no, column, {}, "expected 'key = value'");
        const auto key = trim(raw.substr(0, eq));
        const auto value_raw = raw.substr(eq + 1);
        const auto value = trim(value_raw);
        const auto value_offset = value_raw.find_first_not_of(kWhitespace);
        const std::size_t value_column =
            eq + 2 + (value_offset == std::string_view::npos ? 0 : value_offset);
        if (!is_key(key))
            fail(ScenarioErrorKind::Syntax, line_no, column, std::string(key),
                 "keys are lower-case snake_case, got '" + std::string(key) + "'");
        if (value.empty())
            fail(ScenarioErrorKind::Syntax, line_no, value_column, std::string(key),
                 "missing value");
        if (sections.empty())
            fail(ScenarioErrorKind::Syntax, line_no, column, std::string(key),
                 "key outside of any section");
        auto& section = sections.back();
        if (section.find(key))
            fail(ScenarioErrorKind::Syntax, line_no, column, std::string(key),
                 "duplicate key '" + std::string(key) + "'");
        section.entries.push_back(
            {std::string(key), std::string(value), line_no, column, value_column});
    }
    return sections;
}

void reject_unknown(const Section& s, std::initializer_list<std::string_view> known) {
    for (const auto& e : s.entries)
        if (std::find(known.begin(), known.end(), e.key) == known.end())
            fail(ScenarioErrorKind::UnknownKey, e.line, e.key_column, e.key,
                 "unknown key '" + e.key + "'");
}

void apply_profile_key(LinkProfile& p, const Entry& e) {
    const std::string_view k = e.key;
    if (k == "g_t_db")
        p.g_t = Decibel(number(e));
    else if (k == "g_r_db")
        p.g_r = Decibel(number(e));
    else if (k == "noise_figure_db")
        p.noise_figure = Decibel(number(e));
    else if (k == "f_min_hz")
        p.f_min = Frequency(number(e));
    else if (k == "bw_hz")
        p.bandwidth = Frequency(number(e));
    else if (k == "n_sc")
        p.n_sc = integer(e);
    else if (k == "duty_cycle")
        p.duty_cycle = number(e);
    else if (k == "tx_power_w")
        p.tx_power = PowerWatts(number(e));
    else if (k == "temperature_k")
        p.temperature_k = number(e);
    else if (k == "signal_speed_m_s")
        p.signal_speed = number(e);
    else if (k == "gain_model")
        p.gain_model = gain_model_from_string(e.value);
}

LinkProfile build_profile(const Section& s, const std::vector<LinkProfile>& earlier) {
    reject_unknown(s, {"base", "g_t_db", "g_r_db", "f_min_hz", "bw_hz", "n_sc", "noise_figure_db",
                       "duty_cycle", "tx_power_w", "temperature_k", "gain_model",
                       "signal_speed_m_s"});

    LinkProfile p = builtin_radcom();
    if (const Entry* base = s.find("base")) {
        const auto it = std::find_if(earlier.begin(), earlier.end(),
                                     [&](const LinkProfile& q) { return q.name == base->value; });
        if (it != earlier.end())
            p = *it;
        else if (auto b = find_builtin(base->value))
            p = *b;
        else
            fail(ScenarioErrorKind::UnresolvedReference, base->line, base->value_column, "base",
                 "base profile '" + base->value + "' is neither built-in nor defined earlier");
    }
    p.name = s.name;

    for (const auto& e : s.entries) {
        if (e.key == "base") continue;
        try {
            apply_profile_key(p, e);
            validate(p);
        } catch (const DomainError& err) {
            invariant(e, e.key + ": " + err.what());
        }
    }
    return p;
}

SweepSpec build_sweep(const Section& s) {
    reject_unknown(s, {"profile", "parameter", "grid", "distances", "denominator"});
    auto required = [&](std::string_view key) -> const Entry& {
        const Entry* e = s.find(key);
        if (!e)
            fail(ScenarioErrorKind::Invariant, s.line, 1, std::string(key),
                 "sweep '" + s.name + "' is missing required key '" + std::string(key) + "'");
        return *e;
    };

    SweepSpec spec;
    spec.name = s.name;
    spec.base_profile = required("profile").value;

    const Entry& parameter = required("parameter");
    try {
        spec.parameter = sweep_parameter_from_string(parameter.value);
    } catch (const DomainError& err) {
        invariant(parameter, err.what());
    }

    const Entry& grid = required("grid");
    spec.grid = number_list(grid);
    if (spec.grid.empty()) invariant(grid, "grid must not be empty");

    if (const Entry* d = s.find("distances")) {
        spec.distances = number_list(*d);
        if (spec.distances.empty()) invariant(*d, "distances must not be empty");
        for (double v : spec.distances)
            if (v <= 0.0) invariant(*d, "distances must be > 0 m");
    }
    if (const Entry* den = s.find("denominator")) {
        try {
            spec.denominator = denominator_from_string(den->value);
        } catch (const DomainError& err) {
            invariant(*den, err.what());
        }
    }
    return spec;
}

OutputHints build_output(const Section& s) {
    reject_unknown(s, {"path", "format"});
    OutputHints out;
    if (const Entry* p = s.find("path")) out.path = p->value;
    if (const Entry* f = s.find("format")) {
        if (f->value == "csv")
            out.format = OutputFormat::Csv;
        else if (f->value == "text")
            out.format = OutputFormat::Text;
        else
            invariant(*f, "format must be 'text' or 'csv'");
    }
    return out;
}

}  // namespace

std::string_view to_string(ScenarioErrorKind kind) noexcept {
    switch (kind) {
        case ScenarioErrorKind::Syntax: return "syntax error";
        case ScenarioErrorKind::UnknownKey: return "unknown key";
        case ScenarioErrorKind::Invariant: return "invalid value";
        case ScenarioErrorKind::UnresolvedReference: return "unresolved reference";
    }
    return "error";
}

ScenarioError::ScenarioError(ScenarioErrorKind kind, std::size_t line, std::size_t column,
                             std::string field, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      field_(std::move(field)) {}

LinkProfile ScenarioFile::resolve(const std::string& name) const {
    for (const auto& p : profiles)
        if (p.name == name) return p;
    return resolve_builtin(name);
}

ProfileResolver ScenarioFile::resolver() const {
    return [this](const std::string& name) { return resolve(name); };
}

ScenarioFile parse_scenario(std::string_view text) {
    const auto sections = split_sections(text);
    ScenarioFile file;
    for (const auto& s : sections) {
        switch (s.type) {
            case SectionType::Profile: file.profiles.push_back(build_profile(s, file.profiles)); break;
            case SectionType::Sweep: file.sweeps.push_back(build_sweep(s)); break;
            case SectionType::Output: file.output = build_output(s); break;
        }
    }

    // Sweeps may reference profiles declared later in the file.
    for (std::size_t i = 0; i < file.sweeps.size(); ++i) {
        const auto& spec = file.sweeps[i];
        const auto section = std::find_if(sections.begin(), sections.end(), [&](const Section& s) {
            return s.type == SectionType::Sweep && s.name == spec.name;
        });
        const Entry* profile_entry = section->find("profile");
        LinkProfile base;
        try {
            base = file.resolve(spec.base_profile);
        } catch (const UnknownProfile&) {
            fail(ScenarioErrorKind::UnresolvedReference, profile_entry->line,
                 profile_entry->value_column, "profile",
                 "sweep '" + spec.name + "' references unknown profile '" + spec.base_profile +
                     "'");
        }
        const Entry* grid_entry = section->find("grid");
        for (double g : spec.grid) {
            try {
                (void)with_parameter(base, spec.parameter, g);
            } catch (const DomainError& err) {
                invariant(*grid_entry, std::string("grid value ") + format_shortest(g) +
                                           " invalid for " + std::string(to_string(spec.parameter)) +
                                           ": " + err.what());
            }
        }
    }
    return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_profile(const LinkProfile& p) {
    std::ostringstream out;
    out << "[profile " << p.name << "]\n"
        << "g_t_db = " << format_shortest(p.g_t.value()) << "\n"
        << "g_r_db = " << format_shortest(p.g_r.value()) << "\n"
        << "f_min_hz = " << format_shortest(p.f_min.hz()) << "\n"
        << "bw_hz = " << format_shortest(p.bandwidth.hz()) << "\n"
        << "n_sc = " << p.n_sc << "\n"
        << "noise_figure_db = " << format_shortest(p.noise_figure.value()) << "\n"
        << "duty_cycle = " << format_shortest(p.duty_cycle) << "\n"
        << "tx_power_w = " << format_shortest(p.tx_power.watts()) << "\n"
        << "temperature_k = " << format_shortest(p.temperature_k) << "\n"
        << "gain_model = " << to_string(p.gain_model) << "\n"
        << "signal_speed_m_s = " << format_shortest(p.signal_speed) << "\n";
    return out.str();
}

std::string serialize_scenario(const ScenarioFile& file) {
    auto list = [](const std::vector<double>& values) {
        std::string s = "[";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ", ";
            s += format_shortest(values[i]);
        }
        return s + "]";
    };

    std::ostringstream out;
    for (const auto& p : file.profiles) out << serialize_profile(p) << "\n";
    for (const auto& s : file.sweeps) {
        out << "[sweep " << s.name << "]\n"
            << "profile = " << s.base_profile << "\n"
            << "parameter = " << to_string(s.parameter) << "\n"
            << "grid = " << list(s.grid) << "\n"
            << "distances = " << list(s.distances) << "\n"
            << "denominator = " << to_string(s.denominator) << "\n\n";
    }
    if (file.output) {
        out << "[output]\n";
        if (file.output->path) out << "path = " << *file.output->path << "\n";
        if (file.output->format)
            out << "format = " << (*file.output->format == OutputFormat::Csv ? "csv" : "text")
                << "\n";
    }
    return out.str();
}

}  // namespace isaccap
