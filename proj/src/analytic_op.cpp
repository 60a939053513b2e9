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

#include "fasaris/analytic_op.hpp"

#include "fasaris/errors.hpp"
#include "fasaris/simd/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

namespace fasaris {

namespace {


double clamp01(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

// Gaussian-weighted expectation of Phi(...)^powers over [-h sigma, h sigma].
void gaussian_phi_expectation(const ChebyshevRule& rule, double sigma, double h, double shift, double slope,
                              double inv_scale, const std::vector<int>& powers, std::vector<double>& out)
{
    simd::PhiPanel panel;
    panel.nodes = rule.nodes.data();
    panel.weights = rule.weights.data();
    panel.n = rule.size();
    panel.mid = 0.0;
    panel.half = h * sigma;
    panel.inv_two_var = 0.5 / (sigma * sigma);
    panel.shift = shift;
    panel.slope = slope;
    panel.inv_scale = inv_scale;
    simd::kernels().phi_power_panel(panel, powers.data(), out.data(), powers.size());
    const double scale = panel.half / (std::sqrt(2.0 * std::numbers::pi) * sigma);
    for (double& v : out)
        v *= scale;
}

// Breakpoints c +- w guarding a transition centred at c; nothing when the centre is undefined.
} // namespace

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::bc_analytic:
        return "bc_analytic";
    case Method::iid_analytic:
        return "iid_analytic";
    case Method::monte_carlo:
        return "monte_carlo";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    if (name == "bc_analytic")
        return Method::bc_analytic;
    if (name == "iid_analytic")
        return Method::iid_analytic;
    if (name == "monte_carlo")
        return Method::monte_carlo;
    throw ConfigError("methods: unknown method '" + std::string(name)
                          + "' (expected bc_analytic, iid_analytic or monte_carlo)",
                      "methods");
}

double cdf_gamma_star_iid(double y, const GaussianSurrogate& s, int b_count, const QuadratureSpec& q)
{
    q.validate();
    if (b_count < 1)
        throw DomainError("cdf_gamma_star_iid: block count must be >= 1");
    if (!(s.rho0 < 1.0))
        throw ModelError("cdf_gamma_star_iid: rho0 = 1 leaves no independent component");
    if (!(s.v_gamma > 0.0) || !(s.rho0 >= 0.0))
        throw ModelError("cdf_gamma_star_iid: invalid surrogate");

    const double sigma = std::sqrt(s.v_gamma);
    const double root0 = std::sqrt(s.rho0);
    const double inv_scale = 1.0 / std::sqrt(2.0 * s.v_gamma * (1.0 - s.rho0));
    const std::vector<int> powers{b_count};
    std::vector<double> out(1);
    gaussian_phi_expectation(chebyshev_rule(q.u), sigma, q.h_gauss, y - s.e_gamma, root0, inv_scale, powers, out);
    return clamp01(out[0]);
}

double cdf_gamma_star_bc(double y, const GaussianSurrogate& s, const BlockPartition& part, const QuadratureSpec& q)
{
    q.validate();
    if (part.block_sizes.empty())
        throw ModelError("cdf_gamma_star_bc: empty block partition");
    if (s.rho1 >= 1.0)
        return cdf_gamma_star_iid(y, s, part.block_count(), q);
    if (!(s.rho1 > s.rho0))
        throw ModelError("cdf_gamma_star_bc: requires rho0 < rho1");
    if (!(s.v_gamma > 0.0) || !(s.rho0 >= 0.0))
        throw ModelError("cdf_gamma_star_bc: invalid surrogate");

    std::map<int, int> multiplicity;
    for (int l : part.block_sizes) {
        if (l < 1)
            throw ModelError("cdf_gamma_star_bc: block sizes must be >= 1");
        ++multiplicity[l];
    }
    std::vector<int> powers;
    std::vector<int> counts;
    for (auto [l, c] : multiplicity) {
        powers.push_back(l);
        counts.push_back(c);
    }

    const ChebyshevRule& rule = chebyshev_rule(q.u);
    const double sigma = std::sqrt(s.v_gamma);
    const double root0 = std::sqrt(s.rho0);
    const double root10 = std::sqrt(s.rho1 - s.rho0);
    const double inv_scale = 1.0 / std::sqrt(2.0 * s.v_gamma * (1.0 - s.rho1));

    std::vector<double> inner(powers.size());
    const double inv_two_var = 0.5 / s.v_gamma;
    const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);

    auto outer = [&](double z0) {
        const double shift = y - s.e_gamma - root0 * z0;
        gaussian_phi_expectation(rule, sigma, q.h_gauss, shift, root10, inv_scale, powers, inner);
        double prod = 1.0;
        for (std::size_t j = 0; j < powers.size(); ++j)
            prod *= simd::ipow(inner[j], counts[j]);
        return prod * norm * std::exp(-z0 * z0 * inv_two_var);
    };

    const double h = q.h_gauss * sigma;
    return clamp01(rule.integrate(outer, -h, h));
}

double cdf_snr(double t, const std::function<double(double)>& star_cdf, const LinkBudget& lb, double eps3,
               const QuadratureSpec& q, CdfSupport support)
{
    q.validate();
    if (!(t >= 0.0))
        throw DomainError("cdf_snr: t must be >= 0");
    if (!(lb.omega1 > 0.0))
        throw DomainError("cdf_snr: Omega_1 must be > 0");
    if (!(eps3 > 0.0))
        throw DomainError("cdf_snr: eps3 must be > 0");
    if (t == 0.0)
        return 0.0;

    const double root_t = std::sqrt(t);
    const double x_max = lb.omega2 > 0.0 ? std::min(q.h_chi * std::sqrt(eps3), root_t / lb.omega2)
                                         : q.h_chi * std::sqrt(eps3);
    auto integrand = [&](double x) {
        const double arg = root_t - lb.omega2 * x;
        if (arg < 0.0)
            return 0.0;
        return star_cdf(arg / lb.omega1) * (2.0 * x / eps3) * std::exp(-x * x / eps3);
    };

    const ChebyshevRule& rule = chebyshev_rule(q.u);
    if (!(support.hi > support.lo) || !(lb.omega2 > 0.0))
        return clamp01(rule.integrate(integrand, 0.0, x_max));

    const double x_a = std::clamp((root_t - lb.omega1 * support.hi) / lb.omega2, 0.0, x_max);
    const double x_b = std::clamp((root_t - lb.omega1 * support.lo) / lb.omega2, 0.0, x_max);
    const double head = -std::expm1(-x_a * x_a / eps3);
    return clamp01(head + rule.integrate_endpoint_corrected(integrand, x_a, x_b));
}

double direct_link_outage(const LinkBudget& lb, double eps3)
{
    return -std::expm1(-lb.beta / (lb.omega2 * lb.omega2 * eps3));
}

AnalyticModel build_analytic_model(const SystemConfig& cfg, const AnalyticOptions& opt)
{
    AnalyticModel model;
    model.budget = link_budget(cfg);
    const CorrelationMatrix sigma = build_sigma(cfg.N, cfg.W);
    model.partition = fit_block_partition(sigma, opt.lambda_th, opt.mu);
    model.surrogate = build_surrogate(cfg, model.partition);
    return model;
}

double outage_probability_raw(const SystemConfig& cfg, const AnalyticModel& model, Method method,
                              const QuadratureSpec& q)
{
    const GaussianSurrogate& s = model.surrogate;
    const double sigma = std::sqrt(s.v_gamma);
    const CdfSupport support{s.e_gamma - q.h_gauss * sigma, s.e_gamma + q.h_gauss * sigma};
    std::function<double(double)> star;
    switch (method) {
    case Method::bc_analytic:
        star = [&](double y) { return cdf_gamma_star_bc(y, s, model.partition, q); };
        break;
    case Method::iid_analytic:
        star = [&](double y) { return cdf_gamma_star_iid(y, s, model.partition.block_count(), q); };
        break;
    case Method::monte_carlo:
        throw DomainError("outage_probability: monte_carlo is not an analytic method");
    }
    return cdf_snr(model.budget.beta, star, model.budget, cfg.eps3, q, support);
}

OutageResult outage_probability(const SystemConfig& cfg, Method method, const QuadratureSpec& q,
                                const AnalyticOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    q.validate();
    const AnalyticModel model = build_analytic_model(cfg, opt);
    const double op = outage_probability_raw(cfg, model, method, q);
    const double op_fine = outage_probability_raw(cfg, model, method, q.doubled());
    if (!(op >= -1e-6 && op <= 1.0 + 1e-6) || !std::isfinite(op)) {
        std::ostringstream os;
        os << "outage_probability: result " << op << " outside [0, 1]";
        throw NumericalError(os.str());
    }
    OutageResult r;
    r.op = clamp01(op);
    r.method = method;
    r.diagnostic = std::abs(op - op_fine);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace fasaris
