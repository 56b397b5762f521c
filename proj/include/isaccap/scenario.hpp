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

// Scenario files: line-oriented sections of `key = value` pairs.
//
//   # comment to end of line
//   [profile hot_receiver]
//   base = radcom              # radcom, wifi_bd or an earlier profile
//   noise_figure_db = 10
//
//   [sweep bw_study]
//   profile = hot_receiver
//   parameter = bandwidth      # distance|f_min|n_sc|bandwidth|noise_figure|duty_cycle
//   grid = [150e6, 1e9]
//   distances = [1, 50, 200]   # optional, metres
//   denominator = second       # optional, first|second
//
//   [output]
//   path = bw_study.csv
//   format = csv               # text|csv
//
// Profiles without `base` start from radcom. Unknown keys are rejected.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isaccap/sweep.hpp"

namespace isaccap {

enum class ScenarioErrorKind { Syntax, UnknownKey, Invariant, UnresolvedReference };

std::string_view to_string(ScenarioErrorKind kind) noexcept;

class ScenarioError : public std::runtime_error {
public:
    ScenarioError(ScenarioErrorKind kind, std::size_t line, std::size_t column, std::string field,
                  const std::string& message);

    ScenarioErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// Key or section the error refers to; may be empty for syntax errors.
    const std::string& field() const noexcept { return field_; }

private:
    ScenarioErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string field_;
};

enum class OutputFormat { Text, Csv };

struct OutputHints {
    std::optional<std::string> path;
    std::optional<OutputFormat> format;

    bool operator==(const OutputHints&) const = default;
};

struct ScenarioFile {
    std::vector<LinkProfile> profiles;
    std::vector<SweepSpec> sweeps;
    std::optional<OutputHints> output;

    /// File profiles shadow built-ins of the same name.
    LinkProfile resolve(const std::string& name) const;
    ProfileResolver resolver() const;

    bool operator==(const ScenarioFile&) const = default;
};

ScenarioFile parse_scenario(std::string_view text);
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Fully resolved rendering (no `base` keys) that parses back to `file`.
std::string serialize_scenario(const ScenarioFile& file);
std::string serialize_profile(const LinkProfile& profile);

}  // namespace isaccap
