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
#include "fasaris/simulator.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace fasaris;

namespace {

GaussianSurrogate surrogate_m64()
{
    SystemConfig c;
    BlockPartition p;
    p.block_sizes = {5, 5, 5, 5};
    return build_surrogate(c, p);
}

double gauss_cdf(double y, double e, double v) { return 0.5 * std::erfc(-(y - e) / std::sqrt(2.0 * v)); }

} // namespace

TEST(AnalyticCdf, SingleVariableCollapse)
{
    GaussianSurrogate s = surrogate_m64();
    BlockPartition one;
    one.block_sizes = {1};
    const QuadratureSpec q;
    const double sd = std::sqrt(s.v_gamma);
    for (double k : {-3.0, -1.0, 0.0, 0.5, 2.0, 3.5}) {
        const double y = s.e_gamma + k * sd;
        EXPECT_NEAR(cdf_gamma_star_bc(y, s, one, q), gauss_cdf(y, s.e_gamma, s.v_gamma), 1e-8) << k;
        EXPECT_NEAR(cdf_gamma_star_iid(y, s, 1, q), gauss_cdf(y, s.e_gamma, s.v_gamma), 1e-8) << k;
    }
}

TEST(AnalyticCdf, Saturation)
{
    const GaussianSurrogate s = surrogate_m64();
    BlockPartition p;
    p.block_sizes = {5, 5, 5, 5};
    const QuadratureSpec q;
    const double sd = std::sqrt(s.v_gamma);
    EXPECT_GE(cdf_gamma_star_bc(s.e_gamma + 10 * sd, s, p, q), 1.0 - 1e-6);
    EXPECT_GE(cdf_gamma_star_iid(s.e_gamma + 10 * sd, s, 4, q), 1.0 - 1e-6);
    EXPECT_LE(cdf_gamma_star_bc(s.e_gamma - 10 * sd, s, p, q), 1e-6);
    EXPECT_LE(cdf_gamma_star_iid(s.e_gamma - 10 * sd, s, 4, q), 1e-6);
}

TEST(AnalyticCdf, MonotoneInUnitInterval)
{
    const GaussianSurrogate s = surrogate_m64();
    BlockPartition p;
    p.block_sizes = {2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1};
    const QuadratureSpec q;
    const double sd = std::sqrt(s.v_gamma);
    double pb = -1.0, pi = -1.0;
    for (double k = -8.0; k <= 8.0; k += 0.125) {
        const double y = s.e_gamma + k * sd;
        const double b = cdf_gamma_star_bc(y, s, p, q);
        const double i = cdf_gamma_star_iid(y, s, 12, q);
        EXPECT_GE(b, 0.0);
        EXPECT_LE(b, 1.0);
        EXPECT_GE(i, 0.0);
        EXPECT_LE(i, 1.0);
        EXPECT_GE(b, pb - 1e-12) << k;
        EXPECT_GE(i, pi - 1e-12) << k;
        pb = b;
        pi = i;
    }
}

TEST(AnalyticCdf, FullCorrelationRoutesToIid)
{
    GaussianSurrogate s = surrogate_m64();
    s.rho1 = 1.0;
    BlockPartition p;
    p.block_sizes = {3, 7, 1, 9};
    const QuadratureSpec q;
    for (double k : {-2.0, 0.0, 1.0, 2.5}) {
        const double y = s.e_gamma + k * std::sqrt(s.v_gamma);
        EXPECT_EQ(cdf_gamma_star_bc(y, s, p, q), cdf_gamma_star_iid(y, s, 4, q));
    }
}

TEST(AnalyticCdf, ModelErrors)
{
    GaussianSurrogate s = surrogate_m64();
    BlockPartition p;
    p.block_sizes = {5, 5};
    s.rho1 = s.rho0;
    EXPECT_THROW(cdf_gamma_star_bc(s.e_gamma, s, p, QuadratureSpec{}), ModelError);
    GaussianSurrogate d = surrogate_m64();
    d.rho0 = 1.0;
    EXPECT_THROW(cdf_gamma_star_iid(d.e_gamma, d, 3, QuadratureSpec{}), ModelError);
}

TEST(AnalyticCdf, QuadratureConvergence)
{
    const GaussianSurrogate s = surrogate_m64();
    const SystemConfig c;
    const AnalyticModel m = build_analytic_model(c);
    const QuadratureSpec q;
    const double sd = std::sqrt(s.v_gamma);
    for (double k : {-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0}) {
        const double y = m.surrogate.e_gamma + k * sd;
        EXPECT_LT(std::abs(cdf_gamma_star_bc(y, m.surrogate, m.partition, q) -
                           cdf_gamma_star_bc(y, m.surrogate, m.partition, q.doubled())),
                  1e-6)
            << k;
        EXPECT_LT(std::abs(cdf_gamma_star_iid(y, m.surrogate, m.partition.block_count(), q) -
                           cdf_gamma_star_iid(y, m.surrogate, m.partition.block_count(), q.doubled())),
                  1e-6)
            << k;
    }
}

TEST(AnalyticCdf, MatchesSurrogateMonteCarlo)
{
    const GaussianSurrogate s = surrogate_m64();
    BlockPartition p;
    p.block_sizes = {5, 5, 5, 5};
    const double y = s.e_gamma + std::sqrt(s.v_gamma);
    const std::vector<double> ys{y};
    const std::uint64_t n = 1000000;
    const double bc = cdf_gamma_star_bc(y, s, p, QuadratureSpec{});
    const double mc = surrogate_bc_cdf_mc(s, p, ys, n, 11)[0];
    EXPECT_LE(std::abs(bc - mc), 3.0 * std::sqrt(bc * (1 - bc) / n));

    const double iid = cdf_gamma_star_iid(y, s, 5, QuadratureSpec{});
    const double mci = surrogate_iid_cdf_mc(s, 5, ys, n, 12)[0];
    EXPECT_LE(std::abs(iid - mci), 3.0 * std::sqrt(iid * (1 - iid) / n));
}

TEST(SnrCdf, Basics)
{
    const AnalyticModel m = build_analytic_model(SystemConfig{});
    auto star = [&](double y) { return cdf_gamma_star_bc(y, m.surrogate, m.partition, QuadratureSpec{}); };
    EXPECT_EQ(cdf_snr(0.0, star, m.budget, 0.5, QuadratureSpec{}), 0.0);
    EXPECT_THROW(cdf_snr(-1.0, star, m.budget, 0.5, QuadratureSpec{}), DomainError);
}

TEST(SnrCdf, VanishingDirectLink)
{
    SystemConfig c;
    c.P_dBm = 58.0;
    const AnalyticModel m = build_analytic_model(c);
    const QuadratureSpec q;
    auto star = [&](double y) { return cdf_gamma_star_bc(y, m.surrogate, m.partition, q); };
    const double t = m.budget.beta;
    const double expected = star(std::sqrt(t) / m.budget.omega1);
    EXPECT_NEAR(cdf_snr(t, star, m.budget, 1e-20, q), expected, 1e-6);
}

TEST(SnrCdf, MonotoneInThreshold)
{
    SystemConfig c;
    c.P_dBm = 45.0;
    const AnalyticModel m = build_analytic_model(c);
    const QuadratureSpec q;
    auto star = [&](double y) { return cdf_gamma_star_iid(y, m.surrogate, m.partition.block_count(), q); };
    double prev = 0.0;
    for (double t = 0.0; t <= 4000.0; t += 100.0) {
        const double f = cdf_snr(t, star, m.budget, c.eps3, q);
        EXPECT_GE(f, prev - 1e-12);
        EXPECT_LE(f, 1.0);
        prev = f;
    }
}

TEST(Outage, Saturation)
{
    SystemConfig c;
    c.R = 40.0;
    EXPECT_GE(outage_probability(c, Method::bc_analytic).op, 1.0 - 1e-6);
    SystemConfig hi;
    hi.P_dBm = 60.0;
    SystemConfig lo;
    lo.P_dBm = 0.0;
    for (Method m : {Method::bc_analytic, Method::iid_analytic}) {
        const double op_hi = outage_probability(hi, m).op;
        EXPECT_LE(op_hi, 1e-3);
        EXPECT_LT(op_hi, outage_probability(lo, m).op);
    }
    EXPECT_THROW(outage_probability(c, Method::monte_carlo), DomainError);
}

TEST(Outage, NonincreasingInPowerAndElements)
{
    SystemConfig c;
    for (Method m : {Method::bc_analytic, Method::iid_analytic}) {
        double prev = 1.0;
        for (double p = 30.0; p <= 60.0; p += 3.0) {
            c.P_dBm = p;
            const double op = outage_probability(c, m).op;
            EXPECT_LE(op, prev + 1e-9) << p;
            prev = op;
        }
    }
    c.P_dBm = 58.0;
    c.eps3 = 1e-6;
    double prev = 1.0;
    for (int mm : {32, 48, 64, 80, 96}) {
        c.M = mm;
        const double op = outage_probability(c, Method::bc_analytic).op;
        EXPECT_LE(op, prev + 1e-9) << mm;
        prev = op;
    }
}

TEST(Outage, DiagnosticIsDoublingResidual)
{
    SystemConfig c;
    c.P_dBm = 45.0;
    const AnalyticModel m = build_analytic_model(c);
    const QuadratureSpec q;
    const OutageResult r = outage_probability(c, Method::iid_analytic, q);
    EXPECT_NEAR(r.diagnostic,
                std::abs(outage_probability_raw(c, m, Method::iid_analytic, q) -
                         outage_probability_raw(c, m, Method::iid_analytic, q.doubled())),
                1e-15);
}

TEST(Outage, MethodNames)
{
    for (Method m : {Method::bc_analytic, Method::iid_analytic, Method::monte_carlo})
        EXPECT_EQ(parse_method(method_name(m)), m);
    EXPECT_THROW(parse_method("bogus"), ConfigError);
}

// End-to-end probes where the outage event is not saturated.
TEST(Outage, MatchesFullChannelMonteCarlo)
{
    struct Probe {
        double p_dbm;
        double eps3;
    };
    for (Probe pr : {Probe{45.0, 0.5}, Probe{40.0, 0.5}, Probe{58.0, 1e-6}, Probe{59.0, 1e-6}}) {
        SystemConfig c;
        c.P_dBm = pr.p_dbm;
        c.eps3 = pr.eps3;
        McSpec mc;
        mc.trials = 100000;
        mc.seed = 3;
        const double op_mc = simulate_op(c, mc).op_hat;
        const double op_bc = outage_probability(c, Method::bc_analytic).op;
        EXPECT_LE(std::abs(op_bc - op_mc), std::max(0.02, 0.15 * op_mc)) << pr.p_dbm << " " << op_bc << " " << op_mc;
    }
}

TEST(DirectLink, ClosedForm)
{
    SystemConfig c;
    c.P_dBm = 40.0;
    c.omega_dB = 0.0;
    const LinkBudget lb = link_budget(c);
    EXPECT_NEAR(direct_link_outage(lb, c.eps3), 0.277500906486676240171342233262, 1e-12);
}
