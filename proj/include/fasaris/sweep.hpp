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
#include "fasaris/config_io.hpp"
#include "fasaris/simulator.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fasaris {

enum class SweepVariable { P_dBm, omega_dB, M, N, W, R };

std::string_view variable_name(SweepVariable v);
SweepVariable parse_variable(std::string_view name); // throws ConfigError

// Returns a copy of `cfg` with the swept variable set to `value` (integers are rounded).
SystemConfig with_variable(const SystemConfig& cfg, SweepVariable v, double value);

// "start:stop:step", inclusive of stop up to rounding.
std::vector<double> expand_range(double start, double stop, double step);

struct SweepSpec {
    SweepVariable variable = SweepVariable::P_dBm;
    std::vector<double> values;
    std::vector<Method> methods{Method::bc_analytic, Method::iid_analytic, Method::monte_carlo};
    Scenario scenario = Scenario::fas_aris;
    McSpec mc;
    QuadratureSpec quad;
    AnalyticOptions analytic;

    void validate() const; // throws ConfigError
};

struct SweepRow {
    SweepVariable variable;
    double value = 0.0;
    Method method = Method::bc_analytic;
    double op = 0.0;
    double ci_half_width = 0.0;
    double diag_residual = 0.0;
    std::uint64_t trials = 0;
    double runtime_ms = 0.0;
};

// Evaluates every (value, method) pair; rows come back ordered by value, then method.
// Sweeps over P_dBm, omega_dB and R reuse one set of channel draws for all values.
std::vector<SweepRow> run_sweep(const SystemConfig& base, const SweepSpec& spec);

// Single operating point, one result per method.
std::vector<OutageResult> run_point(const RunConfig& cfg, const std::vector<Method>& methods,
                                    Scenario scenario = Scenario::fas_aris);

inline constexpr std::string_view kCsvHeader = "variable,value,method,op,ci_half_width,diag_residual,trials,runtime_ms";

// Writes the CSV; `with_timing = false` writes runtime_ms as 0 so reruns are byte-identical.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool with_timing = true);
void write_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows, bool with_timing = true);

// Output file could not be written.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fasaris
