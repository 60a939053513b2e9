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

#include "fasaris/analytic_op.hpp"
#include "fasaris/params.hpp"
#include "fasaris/quadrature.hpp"
#include "fasaris/simulator.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fasaris {

// Everything a run can be configured with from a file.
struct RunConfig {
    SystemConfig system;
    QuadratureSpec quad;
    McSpec mc;
    AnalyticOptions analytic;

    void validate() const;
};

struct ConfigKey {
    std::string_view name;
    std::string_view unit; // human-readable unit / expected form
};

// All recognised keys, in file order.
const std::vector<ConfigKey>& config_keys();

// Flat key-value text: one `key = value` per line, `#` starts a comment. Positions are `x, y` in
// meters. Unknown keys and malformed values throw ConfigError naming the key and its unit.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

// Applies one `key = value` setting (used for command-line overrides).
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

// Inverse of parse_config; round-trips every key.
std::string to_config_text(const RunConfig& cfg);

} // namespace fasaris
