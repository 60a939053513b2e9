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

#include "fasaris/moments.hpp"

#include "fasaris/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace fasaris {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSq16 = kPi * kPi / 16.0;

} // namespace

CascadeMoments cascade_moments(int M, double eps1, double eps2)
{
    if (M < 1)
        throw ConfigError("M: number of RIS elements must be a positive integer", "M");
    if (!(eps1 > 0.0) || !(eps2 > 0.0))
        throw ConfigError("eps1/eps2: channel variances must be > 0", "eps1");
    CascadeMoments m;
    m.e_gamma = M * kPi * std::sqrt(eps1 * eps2) / 4.0;
    m.v_gamma = M * eps1 * eps2 * (1.0 - kPiSq16);
    return m;
}

double bessel_i0_scaled(double z)
{
    z = std::abs(z);
    if (z < 30.0)
        return boost::math::cyl_bessel_i(0, z) * std::exp(-z);
    // Large-argument expansion; the smallest term is far below double precision for z >= 30.
    const double inv8z = 1.0 / (8.0 * z);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd * inv8z / k;
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum / std::sqrt(2.0 * kPi * z);
}

double bivariate_rayleigh_pdf(double x, double y, double mu, double eps)
{
    if (!(mu >= 0.0 && mu < 1.0))
        throw DomainError("bivariate_rayleigh_pdf: mu must lie in [0, 1)");
    if (x <= 0.0 || y <= 0.0)
        return 0.0;
    const double s = eps * (1.0 - mu);
    const double z = 2.0 * std::sqrt(mu) * x * y / s;
    // exp(-(x^2 + y^2)/s) I0(z) = exp(-(x^2 + y^2 - 2 sqrt(mu) x y)/s) * I0e(z)
    const double expo = -(x * x + y * y) / s + z;
    return 4.0 * x * y / (eps * s) * std::exp(expo) * bessel_i0_scaled(z);
}

double envelope_cross_moment(double mu, double eps)
{
    if (!(mu >= 0.0 && mu <= 1.0))
        throw DomainError("envelope_cross_moment: mu must lie in [0, 1]");
    if (!(eps > 0.0))
        throw DomainError("envelope_cross_moment: eps must be > 0");
    if (mu == 0.0)
        return kPi * eps / 4.0;
    if (mu == 1.0)
        return eps;

    using boost::math::quadrature::gauss_kronrod;
    const double upper = 6.0 * std::sqrt(eps);
    const double ridge = std::sqrt(mu);
    double worst_inner = 0.0;

    auto inner = [&](double x) {
        auto f = [&](double y) { return x * y * bivariate_rayleigh_pdf(x, y, mu, eps); };
        const double c = std::min(ridge * x, upper);
        double e1 = 0.0;
        double e2 = 0.0;
        const double v = gauss_kronrod<double, 61>::integrate(f, 0.0, c, 15, 1e-11, &e1)
                         + gauss_kronrod<double, 61>::integrate(f, c, upper, 15, 1e-11, &e2);
        worst_inner = std::max(worst_inner, e1 + e2);
        return v;
    };
    double err = 0.0;
    double l1 = 0.0;
    const double value = gauss_kronrod<double, 61>::integrate(inner, 0.0, upper, 15, 1e-10, &err, &l1);
    const double residual = err + worst_inner * upper;
    if (!std::isfinite(value) || residual > 1e-8 * std::abs(value)) {
        std::ostringstream os;
        os << "envelope_cross_moment: integration did not converge (mu=" << mu << ", residual " << residual << ")";
        throw NumericalError(os.str());
    }
    return value;
}

double eta(double mu, double eps1, double eps2)
{
    if (!(mu >= 0.0 && mu <= 1.0))
        throw DomainError("eta: mu must lie in [0, 1]");

    using Key = std::tuple<double, double, double>;
    static std::shared_mutex mutex;
    static std::map<Key, double> cache;
    const Key key{mu, eps1, eps2};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    const double cross = envelope_cross_moment(mu, eps2);
    const double value = (eps1 * cross - kPiSq16 * eps1 * eps2) / (eps1 * eps2 * (1.0 - kPiSq16));
    std::unique_lock lock(mutex);
    cache.emplace(key, value);
    return value;
}

double eta_with_elements(double mu, int M, double eps1, double eps2)
{
    const CascadeMoments m = cascade_moments(M, eps1, eps2);
    const double cross = envelope_cross_moment(mu, eps2);
    return (M * eps1 * cross - m.e_gamma * m.e_gamma / M) / m.v_gamma;
}

GaussianSurrogate build_surrogate(const SystemConfig& cfg, const BlockPartition& partition)
{
    const CascadeMoments m = cascade_moments(cfg.M, cfg.eps1, cfg.eps2);
    GaussianSurrogate s;
    s.e_gamma = m.e_gamma;
    s.v_gamma = m.v_gamma;
    s.rho1 = eta(partition.mu * partition.mu, cfg.eps1, cfg.eps2);
    s.rho0 = eta(0.0, cfg.eps1, cfg.eps2);
    return s;
}

} // namespace fasaris
