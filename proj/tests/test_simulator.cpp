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
#include "fasaris/moments.hpp"
#include "fasaris/simulator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

using namespace fasaris;

namespace {

struct Stats {
    double mean = 0.0;
    double var = 0.0;
    double m4 = 0.0; // central fourth moment
};

Stats port_gain_stats(int M, std::uint64_t n, std::uint64_t seed)
{
    SystemConfig c;
    c.M = M;
    c.N = 1;
    const CorrelationMatrix s = build_sigma(1, c.W);
    PortGainSampler sampler(c, s);
    ShardStream rng(seed, 0);
    std::vector<double> g(1), xs(n);
    for (auto& x : xs) {
        sampler.sample(rng, g);
        x = g[0];
    }
    Stats st;
    for (double x : xs)
        st.mean += x;
    st.mean /= static_cast<double>(n);
    for (double x : xs) {
        const double d = x - st.mean;
        st.var += d * d;
        st.m4 += d * d * d * d;
    }
    st.var /= static_cast<double>(n - 1);
    st.m4 /= static_cast<double>(n);
    return st;
}

} // namespace

TEST(Simulator, PortGainMoments)
{
    for (int M : {8, 64}) {
        const std::uint64_t n = 200000;
        const Stats st = port_gain_stats(M, n, 100 + M);
        const CascadeMoments m = cascade_moments(M, 1.0, 1.0);
        EXPECT_LE(std::abs(st.mean - m.e_gamma), 3.0 * std::sqrt(m.v_gamma / n)) << M;
        EXPECT_LE(std::abs(st.var - m.v_gamma), 3.0 * std::sqrt((st.m4 - st.var * st.var) / n)) << M;
    }
}

TEST(Simulator, PearsonMatchesEtaOfSquaredCorrelation)
{
    for (double W : {0.1, 0.3}) {
        SystemConfig c;
        c.M = 8;
        c.N = 2;
        c.W = W;
        const CorrelationMatrix s = build_sigma(2, W);
        const double g = s(0, 1);
        PortGainSampler sampler(c, s);
        ShardStream rng(77, 0);
        const int n = 200000;
        double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
        std::vector<double> v(2);
        for (int i = 0; i < n; ++i) {
            sampler.sample(rng, v);
            sx += v[0];
            sy += v[1];
            sxx += v[0] * v[0];
            syy += v[1] * v[1];
            sxy += v[0] * v[1];
        }
        const double cov = sxy / n - sx / n * sy / n;
        const double r = cov / std::sqrt((sxx / n - sx / n * sx / n) * (syy / n - sy / n * sy / n));
        const double expected = eta(g * g, 1.0, 1.0);
        EXPECT_LE(std::abs(r - expected), 3.0 * (1 - expected * expected) / std::sqrt(n)) << W << " r=" << r;
        // the coefficient-correlation reading is distinguishable at this sample size
        EXPECT_GT(std::abs(r - eta(std::abs(g), 1.0, 1.0)), 3.0 * (1 - expected * expected) / std::sqrt(n)) << W;
    }
}

TEST(Simulator, FullyCorrelatedPortsAreIdentical)
{
    SystemConfig c;
    c.N = 4;
    const CorrelationMatrix s(Eigen::MatrixXd::Ones(4, 4));
    PortGainSampler sampler(c, s);
    ShardStream rng(5, 0);
    std::vector<double> g(4);
    for (int t = 0; t < 100; ++t) {
        sampler.sample(rng, g);
        for (int k = 1; k < 4; ++k)
            EXPECT_NEAR(g[k], g[0], 1e-12 * g[0]);
    }
}

TEST(Simulator, RootMustReproduceSigma)
{
    SystemConfig c;
    c.N = 3;
    const CorrelationMatrix s = build_sigma(3, 0.7);
    EXPECT_THROW(PortGainSampler(c, s, Eigen::MatrixXd::Identity(3, 3)), NumericalError);
}

TEST(Simulator, Reproducible)
{
    SystemConfig c;
    c.P_dBm = 45.0;
    McSpec mc;
    mc.trials = 20000;
    mc.seed = 9;
    mc.shards = 4;
    const McEstimate a = simulate_op(c, mc);
    const McEstimate b = simulate_op(c, mc);
    EXPECT_EQ(a, b);
    mc.seed = 10;
    EXPECT_NE(simulate_op(c, mc).outages, a.outages);
}

TEST(Simulator, WorkerCountDoesNotChangeResults)
{
    SystemConfig c;
    c.P_dBm = 45.0;
    McSpec mc;
    mc.trials = 8000;
    mc.shards = 3;
    ::setenv("FASARIS_WORKERS", "1", 1);
    const McEstimate a = simulate_op(c, mc);
    ::setenv("FASARIS_WORKERS", "3", 1);
    const McEstimate b = simulate_op(c, mc);
    ::unsetenv("FASARIS_WORKERS");
    EXPECT_EQ(a, b);
}

TEST(Simulator, BatchMatchesSinglePoints)
{
    SystemConfig c;
    McSpec mc;
    mc.trials = 5000;
    std::vector<LinkBudget> budgets;
    for (double p : {40.0, 45.0, 50.0}) {
        SystemConfig q = c;
        q.P_dBm = p;
        budgets.push_back(link_budget(q));
    }
    const auto batch = simulate_op_batch(c, budgets, mc);
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        SystemConfig q = c;
        q.P_dBm = 40.0 + 5.0 * static_cast<double>(i);
        EXPECT_EQ(batch[i], simulate_op(q, mc));
    }
}

TEST(Simulator, SpecValidation)
{
    McSpec mc;
    mc.trials = 0;
    EXPECT_THROW(mc.validate(), ConfigError);
    mc.trials = 3;
    mc.shards = 4;
    EXPECT_THROW(mc.validate(), ConfigError);
}

TEST(Baselines, DirectLinkClosedForm)
{
    SystemConfig c;
    c.P_dBm = 40.0;
    McSpec mc;
    mc.trials = 100000;
    mc.seed = 21;
    const McEstimate e = simulate_baselines(c, mc, Scenario::no_fas_no_ris);
    const double p = 0.277500906486676240171342233262;
    EXPECT_LE(std::abs(e.op_hat - p), 3.0 * std::sqrt(p * (1 - p) / mc.trials));
}

TEST(Baselines, ConfidenceIntervalCalibration)
{
    SystemConfig c;
    c.P_dBm = 40.0;
    const double p = direct_link_outage(link_budget(scenario_setup(c, Scenario::no_fas_no_ris).cfg), c.eps3);
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        McSpec mc;
        mc.trials = 2000;
        mc.seed = seed;
        const McEstimate e = simulate_baselines(c, mc, Scenario::no_fas_no_ris);
        covered += std::abs(e.op_hat - p) <= e.ci_half_width;
    }
    EXPECT_GE(covered, 90);
}

TEST(Baselines, Orderings)
{
    SystemConfig c;
    c.P_dBm = 58.0;
    c.eps3 = 1e-6;
    McSpec mc;
    mc.trials = 20000;
    const McEstimate aris = simulate_baselines(c, mc, Scenario::fas_aris);
    const McEstimate ris = simulate_baselines(c, mc, Scenario::fas_ris);
    const McEstimate nofas = simulate_baselines(c, mc, Scenario::no_fas);
    const McEstimate noris = simulate_baselines(c, mc, Scenario::no_ris);
    EXPECT_LT(aris.op_hat + aris.ci_half_width, ris.op_hat - ris.ci_half_width);
    EXPECT_LT(aris.op_hat + aris.ci_half_width, nofas.op_hat - nofas.ci_half_width);
    EXPECT_LE(ris.op_hat, noris.op_hat);
}

TEST(Baselines, ScenarioSetup)
{
    const SystemConfig c;
    EXPECT_EQ(scenario_setup(c, Scenario::fas_ris).cfg.omega_dB, 0.0);
    EXPECT_EQ(scenario_setup(c, Scenario::no_fas).cfg.N, 1);
    EXPECT_FALSE(scenario_setup(c, Scenario::no_ris).reflected);
    EXPECT_FALSE(scenario_setup(c, Scenario::no_fas_no_ris).reflected);
    for (Scenario s : {Scenario::fas_aris, Scenario::fas_ris, Scenario::no_ris, Scenario::no_fas,
                       Scenario::no_fas_no_ris})
        EXPECT_EQ(parse_scenario(scenario_name(s)), s);
    EXPECT_THROW(parse_scenario("nope"), ConfigError);
}

TEST(SurrogateMc, Deterministic)
{
    SystemConfig c;
    BlockPartition p;
    p.block_sizes = {3, 2};
    const GaussianSurrogate s = build_surrogate(c, p);
    const std::vector<double> ys{s.e_gamma, s.e_gamma + 1.0};
    EXPECT_EQ(surrogate_bc_cdf_mc(s, p, ys, 1000, 4), surrogate_bc_cdf_mc(s, p, ys, 1000, 4));
    EXPECT_THROW(surrogate_iid_cdf_mc(s, 2, ys, 4, 1), DomainError);
}
