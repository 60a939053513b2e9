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

#include "fasaris/correlation.hpp"
#include "fasaris/errors.hpp"
#include "fasaris/moments.hpp"
#include "fasaris/validate.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>

using namespace fasaris;
using boost::math::quadrature::gauss_kronrod;

constexpr double kPi = std::numbers::pi;

TEST(Moments, CascadeSubstitution)
{
    const CascadeMoments m4 = cascade_moments(4, 1.0, 1.0);
    EXPECT_NEAR(m4.e_gamma, kPi, 1e-14);
    EXPECT_NEAR(m4.v_gamma, 4.0 * (1.0 - kPi * kPi / 16.0), 1e-14);
    EXPECT_NEAR(m4.v_gamma, 1.5325988997276605, 1e-12);
    EXPECT_NEAR(cascade_moments(1, 1.0, 1.0).e_gamma, kPi / 4.0, 1e-15);
    const CascadeMoments m = cascade_moments(10, 2.0, 0.5);
    EXPECT_NEAR(m.e_gamma, 10.0 * kPi / 4.0, 1e-13);
    EXPECT_NEAR(m.v_gamma, 10.0 * (1.0 - kPi * kPi / 16.0), 1e-13);
}

TEST(Moments, BesselScaled)
{
    for (double z : {0.0, 0.5, 3.0, 12.0, 29.0, 31.0, 60.0, 250.0, 700.0}) {
        const double ref = boost::math::cyl_bessel_i(0, z) * std::exp(-z);
        EXPECT_NEAR(bessel_i0_scaled(z) / ref, 1.0, 1e-12) << z;
    }
    EXPECT_GT(bessel_i0_scaled(1e6), 0.0);
}

TEST(Moments, CrossMomentLimits)
{
    EXPECT_NEAR(envelope_cross_moment(0.0, 1.0), kPi / 4.0, 1e-10);
    EXPECT_NEAR(envelope_cross_moment(1.0, 1.0), 1.0, 1e-10);
    EXPECT_NEAR(envelope_cross_moment(0.0, 2.5), 2.5 * kPi / 4.0, 1e-9);
    EXPECT_THROW(envelope_cross_moment(-0.1, 1.0), DomainError);
    EXPECT_THROW(envelope_cross_moment(1.1, 1.0), DomainError);
}

TEST(Moments, CrossMomentHypergeometricOracle)
{
    EXPECT_NEAR(envelope_cross_moment(0.5, 1.0), 0.88712521172233252291171214854, 1e-6);
    EXPECT_NEAR(cross_moment_series(0.5), 0.88712521172233252291171214854, 1e-12);
    for (double mu : {0.05, 0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.99})
        EXPECT_NEAR(envelope_cross_moment(mu, 1.0), cross_moment_series(mu), 1e-7) << mu;
}

TEST(Moments, DensityNormalisationAndMarginal)
{
    for (double mu : {0.2, 0.5, 0.9}) {
        const double eps = 1.0;
        const double top = 6.0 * std::sqrt(eps);
        auto inner = [&](double x) {
            return gauss_kronrod<double, 61>::integrate(
                [&](double y) { return bivariate_rayleigh_pdf(x, y, mu, eps); }, 0.0, top, 15, 1e-12);
        };
        const double total = gauss_kronrod<double, 61>::integrate(inner, 0.0, top, 15, 1e-12);
        EXPECT_NEAR(total, 1.0, 1e-6) << mu;
        for (double x : {0.3, 0.8, 1.5, 2.2}) {
            const double rayleigh = 2.0 * x / eps * std::exp(-x * x / eps);
            EXPECT_NEAR(inner(x), rayleigh, 1e-6) << mu << " " << x;
        }
    }
}

TEST(Moments, EtaEndpoints)
{
    EXPECT_NEAR(eta(0.0, 1.0, 1.0), kPi / (4.0 + kPi), 1e-6);
    EXPECT_NEAR(eta(0.0, 1.0, 1.0), 0.439900846488442624, 1e-9);
    EXPECT_NEAR(eta(1.0, 1.0, 1.0), 1.0, 1e-9);
    EXPECT_NEAR(eta(0.97 * 0.97, 1.0, 1.0), 0.962362511574658773, 1e-7);
}

TEST(Moments, EtaMonotone)
{
    double prev = -1.0;
    for (int i = 0; i <= 10; ++i) {
        const double e = eta(0.1 * i, 1.0, 1.0);
        EXPECT_GE(e, prev);
        prev = e;
    }
}

TEST(Moments, EtaIndependentOfElements)
{
    for (double mu : {0.0, 0.3, 0.9409})
        for (int m : {4, 32, 64}) {
            EXPECT_NEAR(eta_with_elements(mu, m, 1.0, 1.0), eta_with_elements(mu, 2 * m, 1.0, 1.0), 1e-12);
            EXPECT_NEAR(eta_with_elements(mu, m, 1.7, 0.6), eta(mu, 1.7, 0.6), 1e-12);
        }
}

TEST(Moments, SurrogateOrdering)
{
    SystemConfig c;
    c.M = 4;
    BlockPartition p;
    p.mu = 1.0;
    p.block_sizes = {20};
    const GaussianSurrogate s = build_surrogate(c, p);
    EXPECT_NEAR(s.e_gamma, kPi, 1e-14);
    EXPECT_NEAR(s.v_gamma, 4.0 - kPi * kPi / 4.0, 1e-14);
    EXPECT_NEAR(s.rho1, 1.0, 1e-9);
    EXPECT_NEAR(s.rho0, 0.43990, 1e-5);

    p.mu = 0.97;
    const GaussianSurrogate t = build_surrogate(c, p);
    EXPECT_GT(t.rho1, t.rho0);
    EXPECT_LT(t.rho1, 1.0);
}

TEST(Moments, DefaultSurrogateGolden)
{
    const SystemConfig c;
    const BlockPartition p = fit_block_partition(build_sigma(c.N, c.W));
    const GaussianSurrogate s = build_surrogate(c, p);
    EXPECT_NEAR(s.e_gamma, 16.0 * kPi, 1e-12);
    EXPECT_NEAR(s.v_gamma, 64.0 * (1.0 - kPi * kPi / 16.0), 1e-12);
    EXPECT_NEAR(s.rho1, 0.962362511574658773, 1e-7);
    EXPECT_NEAR(s.rho0, 0.439900846488442624, 1e-9);
}
