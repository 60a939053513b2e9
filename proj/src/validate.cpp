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

#include "fasaris/validate.hpp"

#include "fasaris/analytic_op.hpp"
#include "fasaris/errors.hpp"
#include "fasaris/moments.hpp"
#include "fasaris/simulator.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

namespace fasaris {

double cross_moment_series(double mu, double tol)
{
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        const double a = -0.5 + k;
        term *= a * a / ((k + 1.0) * (k + 1.0)) * mu;
        sum += term;
        if (std::abs(term) < tol)
            break;
    }
    return std::numbers::pi / 4.0 * sum;
}

namespace {

CheckResult run_check(const std::string& name, const std::function<std::string()>& body)
{
    CheckResult r{name, false, {}};
    try {
        r.detail = body();
        r.passed = true;
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

[[noreturn]] void fail(const std::string& msg)
{
    throw std::runtime_error(msg);
}

std::string fmt(const char* f, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

} // namespace

std::vector<CheckResult> validate_config(const RunConfig& cfg, const ValidateOptions& opt)
{
    std::vector<CheckResult> out;
    std::optional<AnalyticModel> model;

    out.push_back(run_check("configuration", [&] {
        cfg.validate();
        const LinkBudget lb = link_budget(cfg.system);
        return fmt("Omega1=%.6e Omega2=%.6e", lb.omega1, lb.omega2);
    }));

    out.push_back(run_check("block fit", [&] {
        model = build_analytic_model(cfg.system, cfg.analytic);
        return fmt("B=%.0f fit_distance=%.6e", model->partition.block_count(), model->partition.fit_distance);
    }));

    out.push_back(run_check("eta oracle", [&] {
        const double e0 = eta(0.0, cfg.system.eps1, cfg.system.eps2);
        const double ref = std::numbers::pi / (4.0 + std::numbers::pi);
        if (std::abs(e0 - ref) > 1e-6)
            fail(fmt("eta(0)=%.12f differs from pi/(4+pi)=%.12f", e0, ref));
        const double m = envelope_cross_moment(0.5, 1.0);
        const double series = cross_moment_series(0.5);
        if (std::abs(m - series) > 1e-6)
            fail(fmt("E|v_k||v_l| at mu=0.5: %.12f vs series %.12f", m, series));
        return fmt("eta(0)-pi/(4+pi)=%.2e cross-moment error=%.2e", e0 - ref, m - series);
    }));

    out.push_back(run_check("quadrature convergence", [&] {
        if (!model)
            fail("no analytic model (block fit failed)");
        cfg.quad.validate();
        const GaussianSurrogate& s = model->surrogate;
        const double sd = std::sqrt(s.v_gamma);
        double worst = 0.0;
        for (double k : {-2.0, 0.0, 2.0}) {
            const double y = s.e_gamma + k * sd;
            worst = std::max(worst, std::abs(cdf_gamma_star_bc(y, s, model->partition, cfg.quad)
                                             - cdf_gamma_star_bc(y, s, model->partition, cfg.quad.doubled())));
            worst = std::max(worst, std::abs(cdf_gamma_star_iid(y, s, model->partition.block_count(), cfg.quad)
                                             - cdf_gamma_star_iid(y, s, model->partition.block_count(),
                                                                  cfg.quad.doubled())));
        }
        const double op = outage_probability_raw(cfg.system, *model, Method::bc_analytic, cfg.quad);
        const double op2 = outage_probability_raw(cfg.system, *model, Method::bc_analytic, cfg.quad.doubled());
        worst = std::max(worst, std::abs(op - op2));
        if (!(worst < 1e-6))
            fail(fmt("residual %.3e at u=%.0f exceeds 1e-6", worst, cfg.quad.u));
        return fmt("max residual %.3e (u=%.0f)", worst, cfg.quad.u);
    }));

    out.push_back(run_check("surrogate vs Monte Carlo", [&] {
        if (!model)
            fail("no analytic model (block fit failed)");
        const GaussianSurrogate& s = model->surrogate;
        const double sd = std::sqrt(s.v_gamma);
        std::vector<double> ys;
        for (double k : {-1.0, 0.0, 1.0, 2.0, 3.0})
            ys.push_back(s.e_gamma + k * sd);
        const auto mc = surrogate_bc_cdf_mc(s, model->partition, ys, opt.surrogate_trials, opt.seed);
        double worst = 0.0;
        for (std::size_t i = 0; i < ys.size(); ++i) {
            const double a = cdf_gamma_star_bc(ys[i], s, model->partition, cfg.quad);
            const double se = std::sqrt(std::max(a * (1.0 - a), 1e-12) / static_cast<double>(opt.surrogate_trials));
            const double z = std::abs(a - mc[i]) / se;
            worst = std::max(worst, z);
        }
        if (!(worst <= 4.0))
            fail(fmt("analytic CDF deviates by %.2f standard errors", worst));
        return fmt("max deviation %.2f standard errors", worst);
    }));

    return out;
}

} // namespace fasaris
