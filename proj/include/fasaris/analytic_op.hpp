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

#include "fasaris/correlation.hpp"
#include "fasaris/moments.hpp"
#include "fasaris/params.hpp"
#include "fasaris/quadrature.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace fasaris {

enum class Method { bc_analytic, iid_analytic, monte_carlo };

std::string_view method_name(Method m);
Method parse_method(std::string_view name); // throws ConfigError

struct OutageResult {
    double op = 0.0;
    Method method = Method::bc_analytic;
    double diagnostic = 0.0; // quadrature residual |OP(u) - OP(2u)|, or MC 95% CI half-width
    std::uint64_t trials = 0; // Monte Carlo only
    double runtime_ms = 0.0;
};

// Modelling knobs of the analytic pipeline that are not physical parameters.
struct AnalyticOptions {
    double lambda_th = kDefaultLambdaTh;
    double mu = kDefaultMu;
};

// CDF of the best port gain under the block-correlation surrogate:
//   E_z0[ prod_b E_z1[ Phi_b(y, z0, z1)^L_b ] ],
//   Phi_b = 0.5 (1 + erf((y - E - sqrt(rho0) z0 - sqrt(rho1 - rho0) z1) / sqrt(2 V (1 - rho1)))),
// z0, z1 ~ N(0, V). rho1 == 1 is routed to `cdf_gamma_star_iid`.
double cdf_gamma_star_bc(double y, const GaussianSurrogate& s, const BlockPartition& part, const QuadratureSpec& q);

// CDF of the best of B exchangeable blocks: E_d0[ Phi(y, d0)^B ] with correlation rho0.
double cdf_gamma_star_iid(double y, const GaussianSurrogate& s, int b_count, const QuadratureSpec& q);

// Interval outside of which star_cdf is 0 (below lo) or 1 (above hi) to working accuracy.
struct CdfSupport {
    double lo = 0.0;
    double hi = 0.0;
};

// F_gamma(t) = int_0^xmax star_cdf((sqrt(t) - Omega2 x) / Omega1) f_|chi|(x) dx,
// xmax = min(h_chi sqrt(eps3), sqrt(t) / Omega2), f_|chi|(x) = (2x / eps3) exp(-x^2 / eps3).
// With a support, the part where star_cdf = 1 is the Rayleigh CDF in closed form and only
// the transition window is integrated numerically.
double cdf_snr(double t, const std::function<double(double)>& star_cdf, const LinkBudget& lb, double eps3,
               const QuadratureSpec& q, CdfSupport support = {});

// Outage of the direct Rayleigh link alone: 1 - exp(-beta / (Omega2^2 eps3)).
double direct_link_outage(const LinkBudget& lb, double eps3);

// Everything the analytic pipeline derives from a configuration.
struct AnalyticModel {
    LinkBudget budget;
    BlockPartition partition;
    GaussianSurrogate surrogate;
};
AnalyticModel build_analytic_model(const SystemConfig& cfg, const AnalyticOptions& opt = {});

// OP at the given quadrature only (no convergence probe). `model` must come from `cfg`.
double outage_probability_raw(const SystemConfig& cfg, const AnalyticModel& model, Method method,
                              const QuadratureSpec& q);

// Full pipeline; diagnostic = |OP(u) - OP(2u)|.
OutageResult outage_probability(const SystemConfig& cfg, Method method, const QuadratureSpec& q = {},
                                const AnalyticOptions& opt = {});

} // namespace fasaris
