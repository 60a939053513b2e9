// SPDX-License-Identifier: Apache-2.0
//
// fasaris: outage analysis for fluid-antenna receivers behind an active RIS
// Copyright (C) 2026 The fasaris authors
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
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace fasaris {

// Invalid or inconsistent configuration. `key` names the offending field when known.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what, std::string key = {})
        : std::invalid_argument(what), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Failure of a numerical procedure (non-PSD matrix, non-convergence, out-of-range result).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The analytic model cannot represent the configuration (e.g. rho1 <= rho0).
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fasaris
