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

#include <stdexcept>
#include <string>

namespace isaccap {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (non-positive distance, frequency outside the band, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A LinkProfile field violates its invariant. `field()` names the
/// offending field using the scenario-file key.
class InvalidProfile : public DomainError {
public:
    InvalidProfile(std::string field, const std::string& what)
        : DomainError(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A profile name could not be resolved against the built-ins or a scenario.
class UnknownProfile : public std::out_of_range {
public:
    explicit UnknownProfile(const std::string& name)
        : std::out_of_range("unknown profile '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A report cannot be rendered from the given results.
class ReportError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace isaccap
