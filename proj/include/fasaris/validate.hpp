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

#include "fasaris/config_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fasaris {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidateOptions {
    std::uint64_t surrogate_trials = 200000;
    std::uint64_t seed = 7;
};

// Reduced-scale self-check of a configuration: configuration and block fit, eta and
// cross-moment oracles, quadrature convergence (u vs 2u), surrogate CDF vs Monte Carlo.
std::vector<CheckResult> validate_config(const RunConfig& cfg, const ValidateOptions& opt = {});

// (pi/4) 2F1(-1/2, -1/2; 1; mu) summed until terms fall below `tol`.
double cross_moment_series(double mu, double tol = 1e-14);

} // namespace fasaris
